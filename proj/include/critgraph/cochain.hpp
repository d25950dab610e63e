#pragma once

#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/matrix.hpp"

namespace critgraph {

// Rational function on the vertex set, indexed in vertex insertion order.
struct Cochain0 {
    std::vector<Rat> values;

    static Cochain0 zero(const DecoratedGraph& g) { return {std::vector<Rat>(g.n_vertices())}; }
    static Cochain0 unit(const DecoratedGraph& g, std::size_t v);
    Rat total() const;
    Cochain0 operator+(const Cochain0& o) const;
    Cochain0 operator-(const Cochain0& o) const;
    bool operator==(const Cochain0&) const = default;
};

// Rational function on the edge set in reference-orientation coordinates.
struct Cochain1 {
    std::vector<Rat> values;

    static Cochain1 zero(const DecoratedGraph& g) { return {std::vector<Rat>(g.n_edges())}; }
    static Cochain1 unit(const DecoratedGraph& g, std::size_t e);
    bool is_integral() const;
    bool operator==(const Cochain1&) const = default;
};

// Element of ⊕_e Z/(level * t_e); residues reduced into [0, level * t_e).
struct CharacterVector {
    long level = 1;
    std::vector<Int> residues;

    bool operator==(const CharacterVector&) const = default;
    bool is_zero() const;
};

// f(head e) - f(tail e); loops map to 0.
Cochain1 delta(const DecoratedGraph& g, const Cochain0& f);

// Adjoint differential: (1/t_e)(head - tail) summed over edges.
Cochain0 partial_t(const DecoratedGraph& g, const Cochain1& h);

// Signed incidence matrix: +1 at the head, -1 at the tail, loops zero.
IntMat incidence_matrix(const DecoratedGraph& g);

// |V| x |V| matrix of the composition partial_t . delta; positive
// semidefinite, zero row sums, loops contribute nothing.
RatMat laplacian(const DecoratedGraph& g);

Rat pairing0(const DecoratedGraph& g, const Cochain0& a, const Cochain0& b);

// Weighted edge pairing: sum over unoriented edges of a(e)b(e)/t_e.
Rat pairing1(const DecoratedGraph& g, const Cochain1& a, const Cochain1& b);

// Coordinate-wise residue of c(e) mod level * t_e; rejects non-integer
// cochains.
CharacterVector reduce_characters(const DecoratedGraph& g, const Cochain1& c, long level);

// (partial_t(c), characters of c at level 1).
std::pair<Cochain0, CharacterVector> tilde_partial(const DecoratedGraph& g, const Cochain1& c);

}  // namespace critgraph
