#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace critgraph {

// All arithmetic in this library is exact: big integers and big rationals,
// no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Floor-positive remainder: result in [0, m) for m > 0.
inline Int mod_positive(const Int& a, const Int& m) {
    if (m <= 0) throw std::invalid_argument("mod_positive: modulus must be positive");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& d) {
    if (!divides(d, a)) throw std::domain_error("exact_div: division is not exact");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

// p-adic valuation of n > 0.
inline int valuation(Int n, const Int& p) {
    if (n <= 0 || p < 2) throw std::invalid_argument("valuation: need n > 0, p >= 2");
    int v = 0;
    while (divides(p, n)) {
        n = exact_div(n, p);
        ++v;
    }
    return v;
}

// Prime factorisation by trial division; inputs here are edge thicknesses,
// levels and enumerated group orders, all small.
inline std::map<Int, int> factorize(Int n) {
    if (n <= 0) throw std::invalid_argument("factorize: need n > 0");
    std::map<Int, int> out;
    for (Int p = 2; p * p <= n; ++p) {
        while (divides(p, n)) {
            ++out[p];
            n = exact_div(n, p);
        }
    }
    if (n > 1) ++out[n];
    return out;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

// Exact rational text: "p" or "p/q", q > 0, lowest terms.
inline std::string to_string(const Rat& a) { return a.get_str(); }

// Parses "p" or "p/q" (optionally signed); rejects anything else, in
// particular decimal-point notation.
Rat parse_rational(const std::string& text);

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

}  // namespace critgraph
