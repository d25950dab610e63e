#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/linalg.hpp"

namespace critgraph {

// Isomorphism type of a finitely generated abelian group: invariant factors
// d1 | d2 | ... | dr (each >= 2) plus a free rank. Comparisons are always by
// this type, never by chosen generators.
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;
    int free_rank = 0;

    bool operator==(const FiniteAbelianGroup&) const = default;

    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }

    Int order() const {
        if (free_rank != 0) throw std::domain_error("order of an infinite group");
        Int o(1);
        for (const Int& d : invariant_factors) o *= d;
        return o;
    }

    Int exponent() const {
        if (free_rank != 0) throw std::domain_error("exponent of an infinite group");
        return invariant_factors.empty() ? Int(1) : invariant_factors.back();
    }

    std::string str() const;
};

// Builds the invariant-factor chain from a Smith diagonal (entries 1 are
// dropped, entries 0 count toward the free rank) plus extra free summands.
FiniteAbelianGroup group_from_diagonal(const std::vector<Int>& diag, int extra_free = 0);

// Builds the chain from prime-power summands: primes[p] = list of exponents
// l, one (Z/p^l) summand each.
FiniteAbelianGroup group_from_prime_powers(const std::vector<std::pair<Int, std::vector<int>>>& primes);

// Recovers the isomorphism type from the multiset of element orders
// (order -> count), which determines a finite abelian group uniquely.
FiniteAbelianGroup group_from_order_counts(const std::map<Int, Int>& counts);

// A sublattice of Q^n given by a rational generator matrix whose columns
// generate it over Z. Columns may be redundant; the canonical basis is the
// column HNF of the cleared-denominator matrix with the scale tracked.
struct Lattice {
    std::size_t ambient = 0;
    RatMat generators;  // ambient x k

    static Lattice from_columns(std::size_t ambient, const RatMat& generators);
    static Lattice from_int_columns(std::size_t ambient, const IntMat& generators);
};

struct LatticeBasis {
    IntMat basis;  // ambient x rank, column HNF; actual basis is basis / scale
    Int scale;     // positive
    std::size_t rank() const { return basis.cols(); }
};

LatticeBasis lattice_basis(const Lattice& l);

// Integer coordinates of v in the canonical basis, or nullopt if v is not a
// lattice member.
std::optional<std::vector<Int>> lattice_coordinates(const LatticeBasis& b, const std::vector<Rat>& v);

bool lattice_contains(const Lattice& l, const std::vector<Rat>& v);

struct NonContainment : std::domain_error {
    NonContainment(std::size_t column, std::string what) : std::domain_error(std::move(what)), witness_column(column) {}
    std::size_t witness_column;
};

// Presentation of big/small: coordinates live in ⊕ Z/diag[i] (diag[i] = 0
// meaning a free Z summand) after mapping through basis and row transform.
struct QuotientPresentation {
    LatticeBasis big;      // basis of the big lattice
    IntMat row_transform;  // u of the Smith form of the relation matrix
    std::vector<Int> diag; // length = rank(big), padded with zeros
    FiniteAbelianGroup group;

    // Coordinates of [v] for v in the big lattice; entry i is reduced mod
    // diag[i] when diag[i] > 0. Throws NonContainment when v is outside.
    std::vector<Int> coordinates(const std::vector<Rat>& v) const;
};

// Isomorphism type of big/small. Throws NonContainment (with the witness
// generator index) unless every small generator lies in big.
QuotientPresentation lattice_quotient_presentation(const Lattice& big, const Lattice& small);

FiniteAbelianGroup lattice_quotient(const Lattice& big, const Lattice& small);

// Order of the subgroup of ⊕ Z/moduli[i] generated by the given coordinate
// vectors (moduli[i] > 0).
Int subgroup_order(const std::vector<std::vector<Int>>& gens, const std::vector<Int>& moduli);

}  // namespace critgraph
