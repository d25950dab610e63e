#pragma once

#include "critgraph/critical.hpp"

namespace critgraph {

// Cycle-space data of the thickness-weighted flow lattice Λ_t: integer
// cycles h_i from the tree complement, the scaled basis t_e h_i(e) of Λ_t,
// and its Gram matrix under the weighted pairing.
struct FlowLatticeData {
    std::vector<std::vector<Int>> cycles;  // betti(g) integer cycles
    IntMat gram;                           // G_ij = sum_e t_e h_i(e) h_j(e)
};

FlowLatticeData flow_lattice(const DecoratedGraph& g);

IntMat flow_gram(const DecoratedGraph& g);

// Discriminant group Λ_t^# / Λ_t of the flow Gram matrix.
FiniteAbelianGroup jacobian_group(const DecoratedGraph& g);

// The explicit map sending ∂̃ᵗc to l c - δb, where b is the integer
// 0-cochain (pinned to 0 at the first vertex) solving ∂ᵗδ b = l ∂ᵗc.
// Requires l to be a positive multiple of the exponent of K_t.
CharacterVector iota(const DecoratedGraph& g, const Cochain1& c, long ell);

// Invariant factors of Φ_t against J_t, plus the generators-and-relations
// check that iota carries Φ_t bijectively onto the Galois-fixed subgroup of
// ker ∂_{l t} at l = exponent(K_t).
bool verify_abel(const DecoratedGraph& g);

}  // namespace critgraph
