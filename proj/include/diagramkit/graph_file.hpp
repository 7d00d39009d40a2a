#pragma once

#include <string>

#include "diagramkit/graph.hpp"

namespace diagramkit {

// Line format:
//   v <id> w=<int> [g=<int>]     vertex, genus defaults to 0
//   e <id> <id> [m=<int>]        edge, multiplicity defaults to 1
//   # ...                        comment
// Blank lines are ignored. Errors throw ParseError with a 1-based line.
WeightedGraph parse_graph(const std::string& text);
WeightedGraph read_graph_file(const std::string& path);

// Vertices in graph order, then edges by vertex position; every field is
// written explicitly. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const WeightedGraph& g);

}  // namespace diagramkit
