#pragma once

#include <string>
#include <vector>

#include "critgraph/numeric.hpp"

namespace critgraph {

struct Vertex {
    std::string id;
    long genus = 0;
};

// tail/head indices refer to the graph's vertex order; the stored
// (tail, head) pair is the reference orientation of the edge.
struct Edge {
    std::string id;
    std::size_t tail = 0;
    std::size_t head = 0;
    long thickness = 1;

    bool is_loop() const { return tail == head; }
};

// Connected multigraph with loops, per-vertex genus and per-edge thickness.
// Immutable after construction; iteration order over vertices and edges is
// the insertion order.
class DecoratedGraph {
  public:
    DecoratedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    std::size_t n_vertices() const { return vertices_.size(); }
    std::size_t n_edges() const { return edges_.size(); }
    const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // -1 when the id is unknown.
    long vertex_index(const std::string& id) const;
    long edge_index(const std::string& id) const;

    // Valence with loops counted twice.
    long valence(std::size_t v) const;

    bool operator==(const DecoratedGraph&) const = default;

  private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

struct SpanningTree {
    std::vector<std::size_t> edges;  // sorted edge indices, |V| - 1 of them
};

long betti(const DecoratedGraph& g);
long genus(const DecoratedGraph& g);
bool is_stable(const DecoratedGraph& g);

// Connected components of the subgraph on the edges with p^l | t_e; only
// vertices adjacent to such edges survive. Component order follows the
// first vertex's insertion order.
std::vector<DecoratedGraph> subgraph_p_l(const DecoratedGraph& g, const Int& p, int l);

// (b_{p,1}, ..., b_{p,max_p}); b of a disconnected graph is
// |E| - |V| + #components.
std::vector<long> betti_filtration(const DecoratedGraph& g, const Int& p);

// Subdivides every edge of thickness t into a path of t unit edges through
// t-1 fresh genus-0 vertices.
DecoratedGraph blow_up(const DecoratedGraph& g);

// Same graph with every thickness multiplied by factor >= 1.
DecoratedGraph scale_thickness(const DecoratedGraph& g, long factor);

// Deterministic: depth-first from the first vertex, scanning incident edges
// in insertion order.
SpanningTree one_spanning_tree(const DecoratedGraph& g);

// One integer cycle per non-tree edge e: +1 on e, +-1 along the tree path
// closing it, in reference-orientation coordinates.
std::vector<std::vector<Int>> fundamental_cycles(const DecoratedGraph& g, const SpanningTree& t);

}  // namespace critgraph
