#pragma once

#include "critgraph/critical.hpp"

namespace critgraph {

// Degree-zero divisor: a rational 0-cochain lying in the lattice ∂ᵗC¹(Z).
// Membership is validated eagerly at construction.
class Divisor {
  public:
    Divisor(const DecoratedGraph& g, Cochain0 values);

    const Cochain0& values() const { return values_; }

  private:
    Cochain0 values_;
};

// True iff f is an integer combination of the ∂ᵗχ_e.
bool is_divisor(const DecoratedGraph& g, const Cochain0& f);

// One toppling of v: the vertex sends a 1/t_e chip across each incident
// edge (loops send to self), i.e. b - L·χ_v.
Divisor fire(const DecoratedGraph& g, const Divisor& b, std::size_t v);
Divisor fire(const DecoratedGraph& g, const Divisor& b, const std::string& vertex_id);

// Linear equivalence: difference lies in the firing lattice ∂ᵗδC⁰(Z).
bool equivalent(const DecoratedGraph& g, const Divisor& a, const Divisor& b);

// Canonical coordinates of [b] in the invariant-factor presentation of K_t:
// one residue per invariant factor d_i >= 2.
std::vector<Int> class_coordinates(const DecoratedGraph& g, const Divisor& b);
std::vector<Int> class_coordinates(const CriticalPresentation& pres, const Divisor& b);

}  // namespace critgraph
