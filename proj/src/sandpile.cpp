#include "critgraph/sandpile.hpp"

namespace critgraph {

namespace {

Lattice divisor_lattice(const DecoratedGraph& g) {
    RatMat cols(g.n_vertices(), g.n_edges());
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        cols(ed.head, e) += make_rat(1, ed.thickness);
        cols(ed.tail, e) -= make_rat(1, ed.thickness);
    }
    return Lattice::from_columns(g.n_vertices(), cols);
}

Lattice firing_lattice(const DecoratedGraph& g) {
    return Lattice::from_columns(g.n_vertices(), laplacian(g));
}

}  // namespace

Divisor::Divisor(const DecoratedGraph& g, Cochain0 values) : values_(std::move(values)) {
    if (values_.values.size() != g.n_vertices())
        throw std::invalid_argument("divisor: size mismatch");
    if (!is_divisor(g, values_))
        throw std::invalid_argument("divisor: not in the lattice of fractional multidegrees");
}

bool is_divisor(const DecoratedGraph& g, const Cochain0& f) {
    if (f.values.size() != g.n_vertices()) throw std::invalid_argument("is_divisor: size mismatch");
    return lattice_contains(divisor_lattice(g), f.values);
}

Divisor fire(const DecoratedGraph& g, const Divisor& b, std::size_t v) {
    if (v >= g.n_vertices()) throw std::invalid_argument("fire: unknown vertex");
    RatMat lap = laplacian(g);
    Cochain0 next = b.values();
    for (std::size_t i = 0; i < g.n_vertices(); ++i) next.values[i] -= lap(i, v);
    return Divisor(g, std::move(next));
}

Divisor fire(const DecoratedGraph& g, const Divisor& b, const std::string& vertex_id) {
    long v = g.vertex_index(vertex_id);
    if (v < 0) throw std::invalid_argument("fire: unknown vertex '" + vertex_id + "'");
    return fire(g, b, static_cast<std::size_t>(v));
}

bool equivalent(const DecoratedGraph& g, const Divisor& a, const Divisor& b) {
    return lattice_contains(firing_lattice(g), (a.values() - b.values()).values);
}

std::vector<Int> class_coordinates(const CriticalPresentation& pres, const Divisor& b) {
    std::vector<Int> full = pres.quotient.coordinates(b.values().values);
    std::vector<Int> out;
    for (std::size_t i = 0; i < full.size(); ++i)
        if (pres.quotient.diag[i] > 1) out.push_back(full[i]);
    return out;
}

std::vector<Int> class_coordinates(const DecoratedGraph& g, const Divisor& b) {
    return class_coordinates(critical_presentation(g), b);
}

}  // namespace critgraph
