#pragma once

#include "critgraph/critical.hpp"

namespace critgraph {

// Smallest level realising the full component group: the exponent of K_t.
long minimal_level(const DecoratedGraph& g);

// |ker ∂_{l t}|, by Smith form.
Int component_label_count(const DecoratedGraph& g, long ell);

// Coboundary criterion for invariance under the level-l action: every
// fundamental-cycle sum of the label vanishes mod l.
bool is_galois_fixed(const DecoratedGraph& g, const CharacterVector& a, long ell);

// {a in ker ∂_{l t} : all cycle sums ≡ 0 mod l}, by Smith form of the
// combined congruence system.
FiniteAbelianGroup fixed_component_group(const DecoratedGraph& g, long ell);

struct DecompositionReport {
    long level = 1;
    Int total_label_count;
    Int fixed_label_count;
    FiniteAbelianGroup fixed_group;
    bool neron_match = false;  // fixed_group ≅ Φ_t
    long minimal_level = 1;
};

DecompositionReport decompose(const DecoratedGraph& g, long ell);

}  // namespace critgraph
