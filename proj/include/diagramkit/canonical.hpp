#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diagramkit/graph.hpp"

namespace diagramkit {

// Vertex order under which the adjacency code of g is lexicographically
// least among all orders reachable by color refinement + individualization.
// Isomorphic graphs (weights, genera, multiplicities) get equal codes.
std::vector<std::size_t> canonical_order(const WeightedGraph& g);

// Deduplication key; equal iff the graphs are isomorphic.
std::string canonical_form(const WeightedGraph& g);

// g reordered canonically with ids replaced by v1..vn.
WeightedGraph canonicalize(const WeightedGraph& g);

}  // namespace diagramkit
