#include "critgraph/io.hpp"

#include <fstream>
#include <sstream>

namespace critgraph {

namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_';
        if (!ok) return false;
    }
    return true;
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + ": '" + s + "'");
    }
}

}  // namespace

DecoratedGraph parse_graph(std::istream& in) {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::map<std::string, std::size_t> vertex_index;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        auto fail = [&](const std::string& msg) -> std::invalid_argument {
            return std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
        };
        if (kind == "v") {
            std::string id, genus, extra;
            if (!(ls >> id >> genus) || (ls >> extra))
                throw fail("expected 'v <id> <genus>'");
            if (!valid_token(id)) throw fail("bad vertex id '" + id + "'");
            long gv = parse_long(genus, "genus");
            if (gv < 0) throw fail("negative genus");
            if (vertex_index.count(id)) throw fail("duplicate vertex id '" + id + "'");
            vertex_index[id] = vertices.size();
            vertices.push_back(Vertex{id, gv});
        } else if (kind == "e") {
            std::string id, tail, head, thick, extra;
            if (!(ls >> id >> tail >> head >> thick) || (ls >> extra))
                throw fail("expected 'e <id> <tail-id> <head-id> <thickness>'");
            if (!valid_token(id)) throw fail("bad edge id '" + id + "'");
            auto ti = vertex_index.find(tail);
            auto hi = vertex_index.find(head);
            if (ti == vertex_index.end()) throw fail("unknown tail vertex '" + tail + "'");
            if (hi == vertex_index.end()) throw fail("unknown head vertex '" + head + "'");
            long t = parse_long(thick, "thickness");
            if (t < 1) throw fail("thickness must be >= 1");
            edges.push_back(Edge{id, ti->second, hi->second, t});
        } else {
            throw fail("unknown line kind '" + kind + "'");
        }
    }
    return DecoratedGraph(std::move(vertices), std::move(edges));
}

DecoratedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

DecoratedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string serialize_graph(const DecoratedGraph& g) {
    std::ostringstream out;
    for (const Vertex& v : g.vertices()) out << "v " << v.id << " " << v.genus << "\n";
    for (const Edge& e : g.edges())
        out << "e " << e.id << " " << g.vertex(e.tail).id << " " << g.vertex(e.head).id << " "
            << e.thickness << "\n";
    return out.str();
}

}  // namespace critgraph
