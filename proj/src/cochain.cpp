#include "critgraph/cochain.hpp"

namespace critgraph {

Cochain0 Cochain0::unit(const DecoratedGraph& g, std::size_t v) {
    Cochain0 f = zero(g);
    f.values.at(v) = 1;
    return f;
}

Rat Cochain0::total() const {
    Rat s(0);
    for (const Rat& x : values) s += x;
    return s;
}

Cochain0 Cochain0::operator+(const Cochain0& o) const {
    if (values.size() != o.values.size()) throw std::invalid_argument("cochain size mismatch");
    Cochain0 r = *this;
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
    return r;
}

Cochain0 Cochain0::operator-(const Cochain0& o) const {
    if (values.size() != o.values.size()) throw std::invalid_argument("cochain size mismatch");
    Cochain0 r = *this;
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] -= o.values[i];
    return r;
}

Cochain1 Cochain1::unit(const DecoratedGraph& g, std::size_t e) {
    Cochain1 h = zero(g);
    h.values.at(e) = 1;
    return h;
}

bool Cochain1::is_integral() const {
    for (const Rat& x : values)
        if (!critgraph::is_integral(x)) return false;
    return true;
}

bool CharacterVector::is_zero() const {
    for (const Int& r : residues)
        if (r != 0) return false;
    return true;
}

Cochain1 delta(const DecoratedGraph& g, const Cochain0& f) {
    if (f.values.size() != g.n_vertices()) throw std::invalid_argument("delta: size mismatch");
    Cochain1 out = Cochain1::zero(g);
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
        const Edge& ed = g.edge(e);
        out.values[e] = f.values[ed.head] - f.values[ed.tail];
    }
    return out;
}

Cochain0 partial_t(const DecoratedGraph& g, const Cochain1& h) {
    if (h.values.size() != g.n_edges()) throw std::invalid_argument("partial_t: size mismatch");
    Cochain0 out = Cochain0::zero(g);
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        Rat w = h.values[e] / ed.thickness;
        out.values[ed.head] += w;
        out.values[ed.tail] -= w;
    }
    return out;
}

IntMat incidence_matrix(const DecoratedGraph& g) {
    IntMat incidence(g.n_vertices(), g.n_edges());
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        incidence(ed.head, e) += 1;
        incidence(ed.tail, e) -= 1;
    }
    return incidence;
}

RatMat laplacian(const DecoratedGraph& g) {
    RatMat lap(g.n_vertices(), g.n_vertices());
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        Rat w = make_rat(1, ed.thickness);
        lap(ed.head, ed.head) += w;
        lap(ed.tail, ed.tail) += w;
        lap(ed.head, ed.tail) -= w;
        lap(ed.tail, ed.head) -= w;
    }
    return lap;
}

Rat pairing0(const DecoratedGraph& g, const Cochain0& a, const Cochain0& b) {
    if (a.values.size() != g.n_vertices() || b.values.size() != g.n_vertices())
        throw std::invalid_argument("pairing0: size mismatch");
    Rat s(0);
    for (std::size_t v = 0; v < g.n_vertices(); ++v) s += a.values[v] * b.values[v];
    return s;
}

Rat pairing1(const DecoratedGraph& g, const Cochain1& a, const Cochain1& b) {
    if (a.values.size() != g.n_edges() || b.values.size() != g.n_edges())
        throw std::invalid_argument("pairing1: size mismatch");
    Rat s(0);
    for (std::size_t e = 0; e < g.n_edges(); ++e)
        s += a.values[e] * b.values[e] / g.edge(e).thickness;
    return s;
}

CharacterVector reduce_characters(const DecoratedGraph& g, const Cochain1& c, long level) {
    if (level < 1) throw std::invalid_argument("reduce_characters: level must be >= 1");
    if (!c.is_integral())
        throw std::invalid_argument("reduce_characters: cochain must be integer-valued");
    CharacterVector out;
    out.level = level;
    out.residues.resize(g.n_edges());
    for (std::size_t e = 0; e < g.n_edges(); ++e)
        out.residues[e] = mod_positive(c.values[e].get_num(), Int(level) * g.edge(e).thickness);
    return out;
}

std::pair<Cochain0, CharacterVector> tilde_partial(const DecoratedGraph& g, const Cochain1& c) {
    return {partial_t(g, c), reduce_characters(g, c, 1)};
}

}  // namespace critgraph
