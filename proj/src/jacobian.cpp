#include "critgraph/jacobian.hpp"

#include "critgraph/fibre.hpp"

namespace critgraph {

FlowLatticeData flow_lattice(const DecoratedGraph& g) {
    FlowLatticeData d;
    d.cycles = fundamental_cycles(g, one_spanning_tree(g));
    const std::size_t b = d.cycles.size();
    d.gram = IntMat(b, b);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = i; j < b; ++j) {
            Int s(0);
            for (std::size_t e = 0; e < g.n_edges(); ++e)
                s += Int(g.edge(e).thickness) * d.cycles[i][e] * d.cycles[j][e];
            d.gram(i, j) = s;
            d.gram(j, i) = s;
        }
    return d;
}

IntMat flow_gram(const DecoratedGraph& g) { return flow_lattice(g).gram; }

FiniteAbelianGroup jacobian_group(const DecoratedGraph& g) {
    return group_from_diagonal(snf_diagonal(flow_gram(g)));
}

CharacterVector iota(const DecoratedGraph& g, const Cochain1& c, long ell) {
    if (!c.is_integral()) throw std::invalid_argument("iota: cochain must be integer-valued");
    Int exponent = critical_group(g).exponent();
    if (ell < 1 || !divides(exponent, Int(ell)))
        throw std::invalid_argument("iota: level must be a positive multiple of exponent(K_t) = " +
                                    exponent.get_str());

    // Solve the integer Laplacian system L b = ell * ∂ᵗ c; clear the
    // thickness denominators first so the Smith solve is over Z.
    RatMat lap = laplacian(g);
    Cochain0 d = partial_t(g, c);
    Int scale(1);
    for (const Edge& e : g.edges()) scale = int_lcm(scale, Int(e.thickness));
    IntMat a(g.n_vertices(), g.n_vertices());
    std::vector<Int> rhs(g.n_vertices());
    for (std::size_t i = 0; i < g.n_vertices(); ++i) {
        for (std::size_t j = 0; j < g.n_vertices(); ++j) {
            Rat x = lap(i, j) * scale;
            a(i, j) = x.get_num();
        }
        Rat y = d.values[i] * ell * scale;
        rhs[i] = y.get_num();
    }
    auto b = solve_integer(a, rhs);
    if (!b)
        throw std::domain_error("iota: no integral solution of the Laplacian system (input "
                                "falsifies the component-group map)");
    // Pin the gauge: constants are the kernel on a connected graph.
    Cochain0 b0 = Cochain0::zero(g);
    for (std::size_t v = 0; v < g.n_vertices(); ++v) b0.values[v] = Rat((*b)[v] - (*b)[0]);

    Cochain1 db = delta(g, b0);
    Cochain1 result = Cochain1::zero(g);
    for (std::size_t e = 0; e < g.n_edges(); ++e)
        result.values[e] = Rat(ell) * c.values[e] - db.values[e];
    return reduce_characters(g, result, ell);
}

bool verify_abel(const DecoratedGraph& g) {
    ComponentPresentation phi = component_presentation(g);
    if (phi.group != jacobian_group(g)) return false;

    Int exponent = critical_group(g).exponent();
    if (!exponent.fits_slong_p()) throw std::domain_error("verify_abel: exponent overflow");
    const long ell = exponent.get_si();

    // Image of iota on the edge generators must be exactly the Galois-fixed
    // subgroup of ker ∂_{l t}, with order |Φ_t| (injectivity by counting).
    std::vector<Int> moduli;
    for (std::size_t e = 0; e < g.n_edges(); ++e) moduli.push_back(Int(ell) * g.edge(e).thickness);
    std::vector<std::vector<Int>> image_gens;
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
        CharacterVector w = iota(g, Cochain1::unit(g, e), ell);
        if (!is_galois_fixed(g, w, ell)) return false;
        image_gens.push_back(w.residues);
    }
    Int image_order =
        g.n_edges() == 0 ? Int(1) : subgroup_order(image_gens, moduli);
    Int fixed_order = fixed_component_group(g, ell).order();
    return image_order == fixed_order && image_order == phi.group.order();
}

}  // namespace critgraph
