#pragma once

#include <vector>

#include "critgraph/cochain.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/lattice.hpp"

namespace critgraph {

// Presentation of K_t = ∂ᵗC¹(Z) / ∂ᵗδC⁰(Z), both lattices living in
// C⁰(Γ;Q). Kept around so divisor classes can be coordinatised.
struct CriticalPresentation {
    QuotientPresentation quotient;
    FiniteAbelianGroup group;
};

CriticalPresentation critical_presentation(const DecoratedGraph& g);
FiniteAbelianGroup critical_group(const DecoratedGraph& g);

// Presentation of Φ_t = ∂̃ᵗC¹(Z) / ∂̃ᵗδC⁰(Z) as a single lattice quotient
// in C⁰(Γ;Q) ⊕ ⊕_e Q, character coordinates embedded as c(e)/t_e with the
// mod-Z relations adjoined to both lattices. Edges with t_e = 1 carry a
// trivial character block and are omitted from the embedding.
struct ComponentPresentation {
    QuotientPresentation quotient;
    FiniteAbelianGroup group;
    std::vector<std::size_t> tracked_edges;  // edges with t_e > 1, in order

    // Ambient vector of ∂̃ᵗ(c) for an integer 1-cochain c.
    std::vector<Rat> embed(const DecoratedGraph& g, const Cochain1& c) const;
    // Ambient vector (0, a_e / t_e) of a level-1 character.
    std::vector<Rat> embed_character(const DecoratedGraph& g, const CharacterVector& a) const;
};

ComponentPresentation component_presentation(const DecoratedGraph& g);
FiniteAbelianGroup component_group(const DecoratedGraph& g);

// ker ∂_{l t} as a group: labels a in ⊕_e Z/(l t_e) whose fractional
// incidence sums vanish in (Q/Z)^V. Smith-form computation, no enumeration.
FiniteAbelianGroup character_kernel(const DecoratedGraph& g, long ell);

// eq-of-filtration closed form assembled from betti_filtration over the
// primes dividing some thickness.
FiniteAbelianGroup character_kernel_closed_form(const DecoratedGraph& g);

// Weighted complexity c_t = det(L_{a,a}) * prod t_e; asserts the deleted
// index does not matter by computing two principal minors.
Int complexity(const DecoratedGraph& g);

// c_t divided by prod_p p^{b_{p,1}+...+b_{p,max_p}}; raises if the division
// is not exact (which would falsify the order formula on this input).
Int critical_order(const DecoratedGraph& g);

struct ExtensionReport {
    FiniteAbelianGroup kernel;
    FiniteAbelianGroup total;
    FiniteAbelianGroup quotient;
    bool orders_multiply = false;
    bool injection_verified = false;
};

// Checks 0 -> ker ∂_t -> Φ_t -> K_t -> 0 at the level of orders, and that
// the character lattice injects into the Φ_t presentation.
ExtensionReport verify_extension(const DecoratedGraph& g);

// The congruence lattice {a in Z^E : ∂_{l t} a = 0}, plus optional extra
// integer congruence rows (row · a ≡ 0 mod extra_modulus). Shared by the
// character-kernel and fixed-component computations.
Lattice character_congruence_lattice(const DecoratedGraph& g, long ell,
                                     const std::vector<std::vector<Int>>& extra_rows = {},
                                     const Int& extra_modulus = Int(1));

// diag(l * t_e) Z^E, the label identifications.
Lattice character_modulus_lattice(const DecoratedGraph& g, long ell);

}  // namespace critgraph
