#include "critgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace critgraph {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

DecoratedGraph::DecoratedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty()) throw std::invalid_argument("graph: needs at least one vertex");
    std::set<std::string> vids, eids;
    for (const Vertex& v : vertices_) {
        if (v.genus < 0) throw std::invalid_argument("graph: negative genus at " + v.id);
        if (!vids.insert(v.id).second)
            throw std::invalid_argument("graph: duplicate vertex id " + v.id);
    }
    for (const Edge& e : edges_) {
        if (e.thickness < 1)
            throw std::invalid_argument("graph: thickness must be >= 1 at edge " + e.id);
        if (e.tail >= vertices_.size() || e.head >= vertices_.size())
            throw std::invalid_argument("graph: edge " + e.id + " references unknown vertex");
        if (!eids.insert(e.id).second)
            throw std::invalid_argument("graph: duplicate edge id " + e.id);
    }
    UnionFind uf(vertices_.size());
    std::size_t components = vertices_.size();
    for (const Edge& e : edges_)
        if (uf.unite(e.tail, e.head)) --components;
    if (components != 1) throw std::invalid_argument("graph: not connected");
}

long DecoratedGraph::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return static_cast<long>(i);
    return -1;
}

long DecoratedGraph::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) return static_cast<long>(i);
    return -1;
}

long DecoratedGraph::valence(std::size_t v) const {
    long n = 0;
    for (const Edge& e : edges_) {
        if (e.tail == v) ++n;
        if (e.head == v) ++n;
    }
    return n;
}

long betti(const DecoratedGraph& g) {
    return 1 - static_cast<long>(g.n_vertices()) + static_cast<long>(g.n_edges());
}

long genus(const DecoratedGraph& g) {
    long s = 0;
    for (const Vertex& v : g.vertices()) s += v.genus;
    return s + betti(g);
}

bool is_stable(const DecoratedGraph& g) {
    for (std::size_t v = 0; v < g.n_vertices(); ++v)
        if (2 * g.vertex(v).genus - 2 + g.valence(v) <= 0) return false;
    return true;
}

std::vector<DecoratedGraph> subgraph_p_l(const DecoratedGraph& g, const Int& p, int l) {
    if (l < 1) throw std::invalid_argument("subgraph_p_l: l must be >= 1");
    Int pl;
    mpz_pow_ui(pl.get_mpz_t(), p.get_mpz_t(), l);
    std::vector<std::size_t> kept;
    for (std::size_t e = 0; e < g.n_edges(); ++e)
        if (divides(pl, Int(g.edge(e).thickness))) kept.push_back(e);
    if (kept.empty()) return {};

    UnionFind uf(g.n_vertices());
    for (std::size_t e : kept) uf.unite(g.edge(e).tail, g.edge(e).head);

    // Components ordered by their first vertex in insertion order.
    std::vector<std::size_t> roots;
    std::map<std::size_t, std::size_t> root_slot;
    std::set<std::size_t> touched;
    for (std::size_t e : kept) {
        touched.insert(g.edge(e).tail);
        touched.insert(g.edge(e).head);
    }
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
        if (!touched.count(v)) continue;
        std::size_t r = uf.find(v);
        if (!root_slot.count(r)) {
            root_slot[r] = roots.size();
            roots.push_back(r);
        }
    }

    std::vector<std::vector<Vertex>> comp_vertices(roots.size());
    std::vector<std::map<std::size_t, std::size_t>> local_index(roots.size());
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
        if (!touched.count(v)) continue;
        std::size_t slot = root_slot[uf.find(v)];
        local_index[slot][v] = comp_vertices[slot].size();
        comp_vertices[slot].push_back(g.vertex(v));
    }
    std::vector<std::vector<Edge>> comp_edges(roots.size());
    for (std::size_t e : kept) {
        const Edge& ed = g.edge(e);
        std::size_t slot = root_slot[uf.find(ed.tail)];
        Edge copy = ed;
        copy.tail = local_index[slot][ed.tail];
        copy.head = local_index[slot][ed.head];
        comp_edges[slot].push_back(copy);
    }
    std::vector<DecoratedGraph> out;
    out.reserve(roots.size());
    for (std::size_t s = 0; s < roots.size(); ++s)
        out.emplace_back(std::move(comp_vertices[s]), std::move(comp_edges[s]));
    return out;
}

std::vector<long> betti_filtration(const DecoratedGraph& g, const Int& p) {
    if (p < 2) throw std::invalid_argument("betti_filtration: p must be a prime >= 2");
    int max_p = 0;
    for (const Edge& e : g.edges()) max_p = std::max(max_p, valuation(Int(e.thickness), p));
    std::vector<long> out;
    for (int l = 1; l <= max_p; ++l) {
        auto comps = subgraph_p_l(g, p, l);
        long b = 0;
        for (const DecoratedGraph& c : comps) b += betti(c);
        out.push_back(b);
    }
    return out;
}

DecoratedGraph blow_up(const DecoratedGraph& g) {
    std::vector<Vertex> vertices = g.vertices();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.thickness == 1) {
            edges.push_back(e);
            continue;
        }
        std::size_t prev = e.tail;
        for (long k = 1; k < e.thickness; ++k) {
            std::size_t fresh = vertices.size();
            vertices.push_back(Vertex{e.id + "_v" + std::to_string(k), 0});
            edges.push_back(Edge{e.id + "_s" + std::to_string(k), prev, fresh, 1});
            prev = fresh;
        }
        edges.push_back(Edge{e.id + "_s" + std::to_string(e.thickness), prev, e.head, 1});
    }
    return DecoratedGraph(std::move(vertices), std::move(edges));
}

DecoratedGraph scale_thickness(const DecoratedGraph& g, long factor) {
    if (factor < 1) throw std::invalid_argument("scale_thickness: factor must be >= 1");
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) e.thickness *= factor;
    return DecoratedGraph(g.vertices(), std::move(edges));
}

SpanningTree one_spanning_tree(const DecoratedGraph& g) {
    const std::size_t n = g.n_vertices();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> tree;
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        // First unexplored incident edge in insertion order.
        bool advanced = false;
        for (std::size_t e = 0; e < g.n_edges(); ++e) {
            const Edge& ed = g.edge(e);
            std::size_t other;
            if (ed.tail == v && !seen[ed.head])
                other = ed.head;
            else if (ed.head == v && !seen[ed.tail])
                other = ed.tail;
            else
                continue;
            seen[other] = true;
            tree.push_back(e);
            stack.push_back(other);
            advanced = true;
            break;
        }
        if (!advanced) stack.pop_back();
    }
    if (tree.size() != n - 1) throw std::invalid_argument("one_spanning_tree: graph not connected");
    std::sort(tree.begin(), tree.end());
    return SpanningTree{tree};
}

std::vector<std::vector<Int>> fundamental_cycles(const DecoratedGraph& g, const SpanningTree& t) {
    const std::size_t n = g.n_vertices();
    const std::size_t m = g.n_edges();
    std::vector<bool> in_tree(m, false);
    for (std::size_t e : t.edges) in_tree[e] = true;

    // Parent pointers of the tree rooted at vertex 0.
    std::vector<long> parent_edge(n, -1);
    std::vector<std::size_t> order{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t v = order[i];
        for (std::size_t e : t.edges) {
            const Edge& ed = g.edge(e);
            std::size_t other;
            if (ed.tail == v && !seen[ed.head])
                other = ed.head;
            else if (ed.head == v && !seen[ed.tail])
                other = ed.tail;
            else
                continue;
            seen[other] = true;
            parent_edge[other] = static_cast<long>(e);
            order.push_back(other);
        }
    }

    auto depth = [&](std::size_t v) {
        std::size_t d = 0;
        while (parent_edge[v] != -1) {
            const Edge& ed = g.edge(parent_edge[v]);
            v = (ed.tail == v) ? ed.head : ed.tail;
            ++d;
        }
        return d;
    };

    std::vector<std::vector<Int>> cycles;
    for (std::size_t e = 0; e < m; ++e) {
        if (in_tree[e]) continue;
        std::vector<Int> c(m);
        c[e] = 1;
        const Edge& ed = g.edge(e);
        if (!ed.is_loop()) {
            // Walk both endpoints up to their common ancestor; each tree step
            // from v along its parent edge f contributes -1 if f points away
            // from the cycle direction.
            std::size_t a = ed.head, b = ed.tail;
            std::size_t da = depth(a), db = depth(b);
            // The cycle runs e from tail to head, then tree path head -> tail.
            // A tree edge f traversed from x to parent(x) gets +1 when
            // oriented x -> parent, i.e. when f.tail == x, on the head-side
            // walk; the tail-side walk is traversed in reverse, so signs flip.
            while (da > db) {
                const Edge& f = g.edge(parent_edge[a]);
                c[parent_edge[a]] = (f.tail == a) ? 1 : -1;
                a = (f.tail == a) ? f.head : f.tail;
                --da;
            }
            while (db > da) {
                const Edge& f = g.edge(parent_edge[b]);
                c[parent_edge[b]] = (f.tail == b) ? -1 : 1;
                b = (f.tail == b) ? f.head : f.tail;
                --db;
            }
            while (a != b) {
                const Edge& fa = g.edge(parent_edge[a]);
                c[parent_edge[a]] = (fa.tail == a) ? 1 : -1;
                a = (fa.tail == a) ? fa.head : fa.tail;
                const Edge& fb = g.edge(parent_edge[b]);
                c[parent_edge[b]] = (fb.tail == b) ? -1 : 1;
                b = (fb.tail == b) ? fb.head : fb.tail;
            }
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

}  // namespace critgraph
