#include "critgraph/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace critgraph {

std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<Int> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

std::vector<Rat> mat_vec(const RatMat& m, const std::vector<Rat>& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<Rat> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

IntMat hnf(const IntMat& input) {
    IntMat h = input;
    const std::size_t rows = h.rows(), cols = h.cols();
    std::size_t pivot_col = 0;
    for (std::size_t row = 0; row < rows && pivot_col < cols; ++row) {
        // Clear the row to the right of the pivot column with column gcd steps.
        while (true) {
            std::size_t best = cols;
            for (std::size_t j = pivot_col; j < cols; ++j) {
                if (h(row, j) == 0) continue;
                if (best == cols || cmpabs(h(row, j), h(row, best)) < 0) best = j;
            }
            if (best == cols) break;  // row is zero from pivot_col on
            h.swap_cols(pivot_col, best);
            bool reduced_all = true;
            for (std::size_t j = pivot_col + 1; j < cols; ++j) {
                if (h(row, j) == 0) continue;
                Int q = h(row, j) / h(row, pivot_col);  // truncated division
                if (q != 0)
                    for (std::size_t i = 0; i < rows; ++i) h(i, j) -= q * h(i, pivot_col);
                if (h(row, j) != 0) reduced_all = false;
            }
            if (reduced_all) {
                if (h(row, pivot_col) < 0)
                    for (std::size_t i = 0; i < rows; ++i) h(i, pivot_col) = -h(i, pivot_col);
                // Reduce entries left of the pivot into [0, pivot).
                for (std::size_t j = 0; j < pivot_col; ++j) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(),
                               h(row, pivot_col).get_mpz_t());
                    if (q != 0)
                        for (std::size_t i = 0; i < rows; ++i) h(i, j) -= q * h(i, pivot_col);
                }
                ++pivot_col;
                break;
            }
        }
    }
    return h;
}

namespace {

int cmp_abs(const Int& a, const Int& b) { return cmpabs(a, b); }

// One elimination pass used by snf: returns true if any off-diagonal entry
// at or beyond (k, k) remains.
bool find_pivot(const IntMat& m, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            if (!found || cmp_abs(m(i, j), m(pi, pj)) < 0) {
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithResult snf(const IntMat& input) {
    SmithResult r{input, IntMat::identity(input.rows()), IntMat::identity(input.cols())};
    IntMat& d = r.d;
    const std::size_t n = std::min(d.rows(), d.cols());

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(d, k, pi, pj)) break;
        d.swap_rows(k, pi);
        r.u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        r.v.swap_cols(k, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = k + 1; i < d.rows(); ++i) {
                if (d(i, k) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d(i, k).get_mpz_t(), d(k, k).get_mpz_t());
                for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) -= q * d(k, j);
                for (std::size_t j = 0; j < r.u.cols(); ++j) r.u(i, j) -= q * r.u(k, j);
                if (d(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < d.cols(); ++j) {
                if (d(k, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d(k, j).get_mpz_t(), d(k, k).get_mpz_t());
                for (std::size_t i = 0; i < d.rows(); ++i) d(i, j) -= q * d(i, k);
                for (std::size_t i = 0; i < r.v.rows(); ++i) r.v(i, j) -= q * r.v(i, k);
                if (d(k, j) != 0) clean = false;
            }
            if (clean) break;
            std::size_t qi = k, qj = k;
            find_pivot(d, k, qi, qj);
            d.swap_rows(k, qi);
            r.u.swap_rows(k, qi);
            d.swap_cols(k, qj);
            r.v.swap_cols(k, qj);
        }

        // Enforce the divisibility chain: fold any non-multiple into column k.
        for (std::size_t j = k + 1; j < std::min(d.rows(), d.cols()); ++j) {
            if (divides(d(k, k), d(j, j))) continue;
            for (std::size_t i = 0; i < d.rows(); ++i) d(i, k) += d(i, j);
            for (std::size_t i = 0; i < r.v.rows(); ++i) r.v(i, k) += r.v(i, j);
            --k;
            break;
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        if (d(k, k) < 0) {
            for (std::size_t j = 0; j < d.cols(); ++j) d(k, j) = -d(k, j);
            for (std::size_t j = 0; j < r.u.cols(); ++j) r.u(k, j) = -r.u(k, j);
        }
    }
    return r;
}

std::vector<Int> snf_diagonal(const IntMat& m) {
    SmithResult r = snf(m);
    std::vector<Int> d(std::min(m.rows(), m.cols()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = r.d(i, i);
    return d;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: size mismatch");
    SmithResult s = snf(a);
    std::vector<Int> ub = mat_vec(s.u, b);
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Int di = i < n ? s.d(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (!divides(di, ub[i])) return std::nullopt;
            y[i] = exact_div(ub[i], di);
        }
    }
    return mat_vec(s.v, y);
}

IntMat integer_kernel(const IntMat& a) {
    SmithResult s = snf(a);
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (j >= n || s.d(j, j) == 0) free_cols.push_back(j);
    IntMat k(a.cols(), free_cols.size());
    for (std::size_t c = 0; c < free_cols.size(); ++c)
        for (std::size_t i = 0; i < a.cols(); ++i) k(i, c) = s.v(i, free_cols[c]);
    return k;
}

std::optional<std::vector<Rat>> solve_rational(const RatMat& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: size mismatch");
    RatMat m(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        m(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivot_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && m(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        m.swap_rows(row, p);
        Rat inv = m(row, col);
        for (std::size_t j = col; j <= a.cols(); ++j) m(row, j) /= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = col; j <= a.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivot_of_row.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < a.rows(); ++i)
        if (m(i, a.cols()) != 0) return std::nullopt;
    std::vector<Rat> x(a.cols());
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i) x[pivot_of_row[i]] = m(i, a.cols());
    return x;
}

Rat det_rational(RatMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_rational: square matrix required");
    const std::size_t n = m.rows();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != col) {
            m.swap_rows(col, p);
            det = -det;
        }
        det *= m(col, col);
        Rat inv = m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

bool is_unimodular(const IntMat& m) {
    if (m.rows() != m.cols()) return false;
    Rat d = det_rational(to_rational(m));
    return d == 1 || d == -1;
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        return j;
    };
    if (text[i] == '-' || text[i] == '+') ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) throw std::invalid_argument("bad rational literal: " + text);
    if (num_end == text.size()) {
        Rat q(text, 10);
        q.canonicalize();
        return q;
    }
    if (text[num_end] != '/') throw std::invalid_argument("bad rational literal: " + text);
    std::size_t den_begin = num_end + 1;
    std::size_t den_end = digits(den_begin);
    if (den_end != text.size() || den_end == den_begin)
        throw std::invalid_argument("bad rational literal: " + text);
    Rat q(text, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

}  // namespace critgraph
