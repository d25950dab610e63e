#include "critgraph/fibre.hpp"

namespace critgraph {

long minimal_level(const DecoratedGraph& g) {
    Int e = critical_group(g).exponent();
    if (!e.fits_slong_p()) throw std::domain_error("minimal_level: exponent does not fit a long");
    return e.get_si();
}

Int component_label_count(const DecoratedGraph& g, long ell) {
    return character_kernel(g, ell).order();
}

bool is_galois_fixed(const DecoratedGraph& g, const CharacterVector& a, long ell) {
    if (a.level != ell) throw std::invalid_argument("is_galois_fixed: character level mismatch");
    if (a.residues.size() != g.n_edges())
        throw std::invalid_argument("is_galois_fixed: character size mismatch");
    auto cycles = fundamental_cycles(g, one_spanning_tree(g));
    for (const auto& c : cycles) {
        Int sum(0);
        for (std::size_t e = 0; e < g.n_edges(); ++e) sum += c[e] * a.residues[e];
        if (mod_positive(sum, Int(ell)) != 0) return false;
    }
    return true;
}

FiniteAbelianGroup fixed_component_group(const DecoratedGraph& g, long ell) {
    if (ell < 1) throw std::invalid_argument("fixed_component_group: level must be >= 1");
    if (g.n_edges() == 0) return {};
    auto cycles = fundamental_cycles(g, one_spanning_tree(g));
    Lattice fixed = character_congruence_lattice(g, ell, cycles, Int(ell));
    return lattice_quotient(fixed, character_modulus_lattice(g, ell));
}

DecompositionReport decompose(const DecoratedGraph& g, long ell) {
    if (ell < 1) throw std::invalid_argument("decompose: level must be >= 1");
    DecompositionReport r;
    r.level = ell;
    r.total_label_count = component_label_count(g, ell);
    r.fixed_group = fixed_component_group(g, ell);
    r.fixed_label_count = r.fixed_group.order();
    r.neron_match = r.fixed_group == component_group(g);
    r.minimal_level = minimal_level(g);
    return r;
}

}  // namespace critgraph
