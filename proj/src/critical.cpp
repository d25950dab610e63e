#include "critgraph/critical.hpp"

#include <algorithm>
#include <set>

namespace critgraph {

namespace {

RatMat partial_t_matrix(const DecoratedGraph& g) {
    RatMat b(g.n_vertices(), g.n_edges());
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        b(ed.head, e) += make_rat(1, ed.thickness);
        b(ed.tail, e) -= make_rat(1, ed.thickness);
    }
    return b;
}

RatMat principal_minor(const RatMat& m, std::size_t drop) {
    RatMat out(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, ii = 0; i < m.rows(); ++i) {
        if (i == drop) continue;
        for (std::size_t j = 0, jj = 0; j < m.cols(); ++j) {
            if (j == drop) continue;
            out(ii, jj) = m(i, j);
            ++jj;
        }
        ++ii;
    }
    return out;
}

}  // namespace

CriticalPresentation critical_presentation(const DecoratedGraph& g) {
    RatMat image = partial_t_matrix(g);        // columns ∂ᵗχ_e
    RatMat relations = laplacian(g);           // columns ∂ᵗδχ_v
    Lattice big = Lattice::from_columns(g.n_vertices(), image);
    Lattice small = Lattice::from_columns(g.n_vertices(), relations);
    QuotientPresentation q = lattice_quotient_presentation(big, small);
    return CriticalPresentation{q, q.group};
}

FiniteAbelianGroup critical_group(const DecoratedGraph& g) {
    return critical_presentation(g).group;
}

std::vector<Rat> ComponentPresentation::embed(const DecoratedGraph& g, const Cochain1& c) const {
    if (!c.is_integral()) throw std::invalid_argument("embed: cochain must be integer-valued");
    Cochain0 d = partial_t(g, c);
    std::vector<Rat> v(g.n_vertices() + tracked_edges.size());
    for (std::size_t i = 0; i < g.n_vertices(); ++i) v[i] = d.values[i];
    for (std::size_t k = 0; k < tracked_edges.size(); ++k) {
        std::size_t e = tracked_edges[k];
        v[g.n_vertices() + k] = c.values[e] / g.edge(e).thickness;
    }
    return v;
}

std::vector<Rat> ComponentPresentation::embed_character(const DecoratedGraph& g,
                                                        const CharacterVector& a) const {
    if (a.level != 1) throw std::invalid_argument("embed_character: level-1 characters only");
    std::vector<Rat> v(g.n_vertices() + tracked_edges.size());
    for (std::size_t k = 0; k < tracked_edges.size(); ++k) {
        std::size_t e = tracked_edges[k];
        v[g.n_vertices() + k] = make_rat(a.residues[e], g.edge(e).thickness);
    }
    return v;
}

ComponentPresentation component_presentation(const DecoratedGraph& g) {
    const std::size_t n = g.n_vertices();
    std::vector<std::size_t> tracked;
    for (std::size_t e = 0; e < g.n_edges(); ++e)
        if (g.edge(e).thickness > 1) tracked.push_back(e);
    const std::size_t m = tracked.size();
    const std::size_t ambient = n + m;

    RatMat dt = partial_t_matrix(g);
    RatMat lap = laplacian(g);

    // big: (∂ᵗχ_e, χ_e/t_e) for every edge, plus the unit relations (0, χ_e).
    RatMat big(ambient, g.n_edges() + m);
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
        for (std::size_t i = 0; i < n; ++i) big(i, e) = dt(i, e);
        for (std::size_t k = 0; k < m; ++k)
            if (tracked[k] == e) big(n + k, e) = make_rat(1, g.edge(e).thickness);
    }
    for (std::size_t k = 0; k < m; ++k) big(n + k, g.n_edges() + k) = 1;

    // small: (∂ᵗδχ_v, (δχ_v)_e/t_e) for every vertex, plus the unit relations.
    RatMat small(ambient, n + m);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < n; ++i) small(i, v) = lap(i, v);
        Cochain1 db = delta(g, Cochain0::unit(g, v));
        for (std::size_t k = 0; k < m; ++k) {
            std::size_t e = tracked[k];
            small(n + k, v) = db.values[e] / g.edge(e).thickness;
        }
    }
    for (std::size_t k = 0; k < m; ++k) small(n + k, n + k) = 1;

    QuotientPresentation q = lattice_quotient_presentation(
        Lattice::from_columns(ambient, big), Lattice::from_columns(ambient, small));
    return ComponentPresentation{q, q.group, tracked};
}

FiniteAbelianGroup component_group(const DecoratedGraph& g) {
    return component_presentation(g).group;
}

Lattice character_modulus_lattice(const DecoratedGraph& g, long ell) {
    IntMat d(g.n_edges(), g.n_edges());
    for (std::size_t e = 0; e < g.n_edges(); ++e) d(e, e) = Int(ell) * g.edge(e).thickness;
    return Lattice::from_int_columns(g.n_edges(), d);
}

Lattice character_congruence_lattice(const DecoratedGraph& g, long ell,
                                     const std::vector<std::vector<Int>>& extra_rows,
                                     const Int& extra_modulus) {
    const std::size_t m = g.n_edges();
    Int big_mod(1);
    for (const Edge& e : g.edges()) big_mod = int_lcm(big_mod, Int(ell) * e.thickness);
    if (!extra_rows.empty()) big_mod = int_lcm(big_mod, extra_modulus);

    IntMat inc = incidence_matrix(g);
    const std::size_t rows = g.n_vertices() + extra_rows.size();
    // Solve [C | big_mod * I] over Z and project to the label block: the
    // projection spans {a : C a ≡ 0 mod big_mod}.
    IntMat system(rows, m + rows);
    for (std::size_t v = 0; v < g.n_vertices(); ++v)
        for (std::size_t e = 0; e < m; ++e)
            system(v, e) = inc(v, e) * exact_div(big_mod, Int(ell) * g.edge(e).thickness);
    for (std::size_t r = 0; r < extra_rows.size(); ++r) {
        if (extra_rows[r].size() != m)
            throw std::invalid_argument("character_congruence_lattice: bad extra row size");
        for (std::size_t e = 0; e < m; ++e)
            system(g.n_vertices() + r, e) = extra_rows[r][e] * exact_div(big_mod, extra_modulus);
    }
    for (std::size_t r = 0; r < rows; ++r) system(r, m + r) = big_mod;

    IntMat kernel = integer_kernel(system);
    IntMat labels(m, kernel.cols());
    for (std::size_t j = 0; j < kernel.cols(); ++j)
        for (std::size_t e = 0; e < m; ++e) labels(e, j) = kernel(e, j);
    return Lattice::from_int_columns(m, labels);
}

FiniteAbelianGroup character_kernel(const DecoratedGraph& g, long ell) {
    if (ell < 1) throw std::invalid_argument("character_kernel: level must be >= 1");
    if (g.n_edges() == 0) return {};
    return lattice_quotient(character_congruence_lattice(g, ell),
                            character_modulus_lattice(g, ell));
}

FiniteAbelianGroup character_kernel_closed_form(const DecoratedGraph& g) {
    std::set<Int> primes;
    for (const Edge& e : g.edges())
        for (const auto& [p, v] : factorize(Int(e.thickness))) primes.insert(p);
    std::vector<std::pair<Int, std::vector<int>>> summands;
    for (const Int& p : primes) {
        std::vector<long> b = betti_filtration(g, p);
        std::vector<int> exps;
        for (std::size_t l = 1; l <= b.size(); ++l) {
            long next = l < b.size() ? b[l] : 0;
            for (long i = 0; i < b[l - 1] - next; ++i) exps.push_back(static_cast<int>(l));
        }
        if (!exps.empty()) summands.push_back({p, exps});
    }
    return group_from_prime_powers(summands);
}

Int complexity(const DecoratedGraph& g) {
    RatMat lap = laplacian(g);
    Int thickness_product(1);
    for (const Edge& e : g.edges()) thickness_product *= e.thickness;

    auto minor_value = [&](std::size_t drop) {
        Rat d = det_rational(principal_minor(lap, drop));
        Rat scaled = d * thickness_product;
        if (!is_integral(scaled) || scaled < 0)
            throw std::domain_error("complexity: minor formula produced a non-natural value");
        return Int(scaled.get_num());
    };

    Int c = minor_value(0);
    if (g.n_vertices() > 1 && minor_value(1) != c)
        throw std::domain_error("complexity: deleted-index invariance failed");
    return c;
}

Int critical_order(const DecoratedGraph& g) {
    Int c = complexity(g);
    std::set<Int> primes;
    for (const Edge& e : g.edges())
        for (const auto& [p, v] : factorize(Int(e.thickness))) primes.insert(p);
    for (const Int& p : primes) {
        long exponent_sum = 0;
        for (long b : betti_filtration(g, p)) exponent_sum += b;
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), exponent_sum);
        if (!divides(pw, c))
            throw std::domain_error("critical_order: order formula is not exact on this input");
        c = exact_div(c, pw);
    }
    return c;
}

ExtensionReport verify_extension(const DecoratedGraph& g) {
    ExtensionReport r;
    r.kernel = character_kernel(g, 1);
    ComponentPresentation phi = component_presentation(g);
    r.total = phi.group;
    r.quotient = critical_group(g);
    r.orders_multiply = r.total.order() == r.kernel.order() * r.quotient.order();

    // The kernel part sits inside Φ_t as the classes of (0, a/t); build the
    // integral character lattice ker ∂_t ∩ C¹(Z) image and compare orders.
    std::vector<Int> moduli;
    bool all_positive = true;
    for (const Int& d : phi.quotient.diag) {
        if (d <= 0) all_positive = false;
        moduli.push_back(d);
    }
    if (!all_positive) {
        r.injection_verified = false;
        return r;
    }
    Lattice labels = character_congruence_lattice(g, 1);
    LatticeBasis basis = lattice_basis(labels);
    std::vector<std::vector<Int>> gens;
    for (std::size_t j = 0; j < basis.rank(); ++j) {
        Cochain1 lift = Cochain1::zero(g);
        for (std::size_t e = 0; e < g.n_edges(); ++e)
            lift.values[e] = make_rat(basis.basis(e, j), basis.scale);
        if (!lift.is_integral())
            throw std::domain_error("verify_extension: character lattice is not integral");
        CharacterVector a = reduce_characters(g, lift, 1);
        gens.push_back(phi.quotient.coordinates(phi.embed_character(g, a)));
    }
    r.injection_verified = subgroup_order(gens, moduli) == r.kernel.order();
    return r;
}

}  // namespace critgraph
