#pragma once

#include <iosfwd>
#include <string>

#include "critgraph/graph.hpp"

namespace critgraph {

// Graph text format, UTF-8 lines:
//   # comment
//   v <id> <genus>
//   e <id> <tail-id> <head-id> <thickness>
// ids are alphanumeric tokens ([A-Za-z0-9_]); line order fixes the
// iteration order and the reference orientation.
DecoratedGraph parse_graph(std::istream& in);
DecoratedGraph parse_graph_text(const std::string& text);
DecoratedGraph load_graph_file(const std::string& path);

// Emits one v line per vertex and one e line per edge in insertion order;
// serialize(parse(serialize(g))) is byte-identical to serialize(g).
std::string serialize_graph(const DecoratedGraph& g);

}  // namespace critgraph
