#pragma once

#include <optional>
#include <vector>

#include "critgraph/matrix.hpp"

namespace critgraph {

// Column-style Hermite normal form: unimodular column operations only, so
// the column span over Z is preserved. The result is the canonical
// representative of that span: pivots positive, pivot rows strictly
// increasing across columns, entries left of a pivot reduced into
// [0, pivot), zero columns trailing.
IntMat hnf(const IntMat& m);

struct SmithResult {
    IntMat d;  // diagonal, d1 | d2 | ..., entries nonnegative
    IntMat u;  // unimodular, rows
    IntMat v;  // unimodular, cols
};

// u * m * v = d. Pivot choice: smallest nonzero absolute value, ties broken
// by row then column index, so the transforms are reproducible.
SmithResult snf(const IntMat& m);

std::vector<Int> snf_diagonal(const IntMat& m);

// Some integral solution of a*x = b, or nullopt if none exists. Decided
// exactly through the Smith form.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b);

// Basis of the integer kernel lattice {x : a*x = 0}; the basis is saturated
// (a Z-basis of the full kernel, not a finite-index sublattice).
IntMat integer_kernel(const IntMat& a);

// Unique rational solution data of a*x = b for arbitrary a: returns nullopt
// when the system is inconsistent; when consistent returns one solution
// (free variables pinned to 0).
std::optional<std::vector<Rat>> solve_rational(const RatMat& a, const std::vector<Rat>& b);

Rat det_rational(RatMat m);

bool is_unimodular(const IntMat& m);

}  // namespace critgraph
