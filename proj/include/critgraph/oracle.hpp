#pragma once

#include <vector>

#include "critgraph/cochain.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/lattice.hpp"

namespace critgraph {
namespace oracle {

// Brute-force ground truth. Guards are hard errors, never silent
// truncation. The counting kernels have OpenMP-parallel defaults and serial
// reference implementations kept for testing; output order is canonical
// either way.

struct GuardViolation : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr std::size_t kMaxEdgesForTreeEnumeration = 24;
inline constexpr long kMaxLabelsForKernelEnumeration = 1000000;

// All spanning trees, in lexicographic edge-subset order. |E| <= 24.
std::vector<SpanningTree> enumerate_spanning_trees(const DecoratedGraph& g);

// c_t = sum over spanning trees of the product of the omitted thicknesses.
Int complexity_by_trees(const DecoratedGraph& g);
Int complexity_by_trees_serial(const DecoratedGraph& g);

// Isomorphism type of ker ∂_{l t} recovered from the element-order profile
// of an exhaustive scan. Π_e (l * t_e) <= 10^6.
FiniteAbelianGroup kernel_by_enumeration(const DecoratedGraph& g, long ell);
FiniteAbelianGroup kernel_by_enumeration_serial(const DecoratedGraph& g, long ell);

// The kernel labels themselves, sorted; same guard.
std::vector<std::vector<Int>> enumerate_kernel_labels(const DecoratedGraph& g, long ell);

}  // namespace oracle
}  // namespace critgraph
