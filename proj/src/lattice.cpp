#include "critgraph/lattice.hpp"

#include <algorithm>
#include <map>

namespace critgraph {

std::string FiniteAbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + invariant_factors[i].get_str();
    }
    for (int i = 0; i < free_rank; ++i) {
        if (!s.empty()) s += " x ";
        s += "Z";
    }
    return s;
}

FiniteAbelianGroup group_from_diagonal(const std::vector<Int>& diag, int extra_free) {
    FiniteAbelianGroup g;
    g.free_rank = extra_free;
    for (const Int& d : diag) {
        if (d == 0)
            ++g.free_rank;
        else if (d > 1)
            g.invariant_factors.push_back(d);
        else if (d < 0)
            throw std::invalid_argument("group_from_diagonal: negative entry");
    }
    std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
    return g;
}

FiniteAbelianGroup group_from_prime_powers(
    const std::vector<std::pair<Int, std::vector<int>>>& primes) {
    // Align each prime's exponent partition from the largest down; the j-th
    // invariant factor (from the top) multiplies the j-th largest exponents.
    std::size_t max_len = 0;
    std::vector<std::pair<Int, std::vector<int>>> sorted = primes;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [p, exps] : sorted) {
        std::sort(exps.begin(), exps.end(), std::greater<int>());
        while (!exps.empty() && exps.back() == 0) exps.pop_back();
        max_len = std::max(max_len, exps.size());
    }
    FiniteAbelianGroup g;
    for (std::size_t j = 0; j < max_len; ++j) {
        Int d(1);
        for (const auto& [p, exps] : sorted) {
            if (j < exps.size()) {
                Int pw;
                mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), exps[j]);
                d *= pw;
            }
        }
        g.invariant_factors.push_back(d);
    }
    std::reverse(g.invariant_factors.begin(), g.invariant_factors.end());
    return g;
}

FiniteAbelianGroup group_from_order_counts(const std::map<Int, Int>& counts) {
    Int total(0);
    Int exponent(1);
    for (const auto& [order, count] : counts) {
        if (order < 1 || count < 1) throw std::invalid_argument("bad order profile");
        total += count;
        exponent = int_lcm(exponent, order);
    }
    if (total == 0) throw std::invalid_argument("empty order profile");

    std::vector<std::pair<Int, std::vector<int>>> primes;
    for (const auto& [p, vmax] : factorize(exponent)) {
        // m_k = log_p #{a : p^k a = 0}; the difference m_k - m_{k-1} is the
        // number of cyclic p-summands of exponent >= p^k.
        std::vector<int> m(vmax + 1, 0);
        for (int k = 1; k <= vmax; ++k) {
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
            Int cnt(0);
            for (const auto& [order, count] : counts)
                if (divides(order, pk)) cnt += count;
            // cnt is p^{m_k}
            Int c = cnt;
            int logv = 0;
            while (c > 1) {
                c = exact_div(c, p);
                ++logv;
            }
            m[k] = logv;
        }
        std::vector<int> conj(vmax + 1, 0);
        for (int k = 1; k <= vmax; ++k) conj[k] = m[k] - m[k - 1];
        std::vector<int> exps;
        for (int k = 1; k <= vmax; ++k) {
            int here = conj[k] - (k < vmax ? conj[k + 1] : 0);
            for (int i = 0; i < here; ++i) exps.push_back(k);
        }
        primes.push_back({p, exps});
    }
    FiniteAbelianGroup g = group_from_prime_powers(primes);
    if (g.order() != total)
        throw std::domain_error("order profile does not describe an abelian group");
    return g;
}

Lattice Lattice::from_columns(std::size_t ambient, const RatMat& generators) {
    if (generators.rows() != ambient && generators.cols() != 0)
        throw std::invalid_argument("Lattice: generator rows must equal ambient dimension");
    return Lattice{ambient, generators};
}

Lattice Lattice::from_int_columns(std::size_t ambient, const IntMat& generators) {
    return from_columns(ambient, to_rational(generators));
}

LatticeBasis lattice_basis(const Lattice& l) {
    Int scale(1);
    for (std::size_t i = 0; i < l.generators.rows(); ++i)
        for (std::size_t j = 0; j < l.generators.cols(); ++j)
            scale = int_lcm(scale, l.generators(i, j).get_den());
    IntMat cleared(l.ambient, l.generators.cols());
    for (std::size_t i = 0; i < l.generators.rows(); ++i)
        for (std::size_t j = 0; j < l.generators.cols(); ++j) {
            Rat x = l.generators(i, j) * scale;
            cleared(i, j) = x.get_num();
        }
    IntMat h = hnf(cleared);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < h.rows(); ++i)
            if (h(i, j) != 0) zero = false;
        if (!zero) rank = j + 1;
    }
    IntMat basis(l.ambient, rank);
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < l.ambient; ++i) basis(i, j) = h(i, j);
    return LatticeBasis{basis, scale};
}

std::optional<std::vector<Int>> lattice_coordinates(const LatticeBasis& b,
                                                    const std::vector<Rat>& v) {
    if (v.size() != b.basis.rows()) throw std::invalid_argument("lattice_coordinates: bad vector size");
    std::vector<Rat> rhs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = v[i] * b.scale;
    auto x = solve_rational(to_rational(b.basis), rhs);
    if (!x) return std::nullopt;
    std::vector<Int> coords(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
        if (!is_integral((*x)[i])) return std::nullopt;
        coords[i] = (*x)[i].get_num();
    }
    return coords;
}

bool lattice_contains(const Lattice& l, const std::vector<Rat>& v) {
    return lattice_coordinates(lattice_basis(l), v).has_value();
}

QuotientPresentation lattice_quotient_presentation(const Lattice& big, const Lattice& small) {
    if (big.ambient != small.ambient)
        throw std::invalid_argument("lattice_quotient: ambient dimensions differ");
    LatticeBasis basis = lattice_basis(big);
    const std::size_t r = basis.rank();
    const std::size_t k = small.generators.cols();
    IntMat rel(r, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto coords = lattice_coordinates(basis, small.generators.column(j));
        if (!coords)
            throw NonContainment(j, "lattice_quotient: small generator " + std::to_string(j) +
                                        " is not in the big lattice");
        for (std::size_t i = 0; i < r; ++i) rel(i, j) = (*coords)[i];
    }
    SmithResult s = snf(rel);
    std::vector<Int> diag(r, Int(0));
    for (std::size_t i = 0; i < std::min(r, k); ++i) diag[i] = s.d(i, i);
    QuotientPresentation q{basis, s.u, diag, group_from_diagonal(diag)};
    return q;
}

FiniteAbelianGroup lattice_quotient(const Lattice& big, const Lattice& small) {
    return lattice_quotient_presentation(big, small).group;
}

std::vector<Int> QuotientPresentation::coordinates(const std::vector<Rat>& v) const {
    auto x = lattice_coordinates(big, v);
    if (!x) throw NonContainment(0, "coordinates: vector is not in the big lattice");
    std::vector<Int> y = mat_vec(row_transform, *x);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (diag[i] > 0) y[i] = mod_positive(y[i], diag[i]);
    return y;
}

Int subgroup_order(const std::vector<std::vector<Int>>& gens, const std::vector<Int>& moduli) {
    const std::size_t r = moduli.size();
    for (const Int& m : moduli)
        if (m <= 0) throw std::invalid_argument("subgroup_order: moduli must be positive");
    IntMat stacked(r, gens.size() + r);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].size() != r) throw std::invalid_argument("subgroup_order: bad generator size");
        for (std::size_t i = 0; i < r; ++i) stacked(i, j) = gens[j][i];
    }
    for (std::size_t i = 0; i < r; ++i) stacked(i, gens.size() + i) = moduli[i];
    // |subgroup| = [Z^r : diag(moduli)] / [Z^r : span + diag(moduli)]
    std::vector<Int> d = snf_diagonal(stacked);
    Int index(1);
    for (const Int& x : d) {
        if (x == 0) throw std::domain_error("subgroup_order: degenerate stacked lattice");
        index *= x;
    }
    Int full(1);
    for (const Int& m : moduli) full *= m;
    return exact_div(full, index);
}

}  // namespace critgraph
