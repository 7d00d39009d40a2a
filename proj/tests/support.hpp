#pragma once

#include <random>
#include <string>
#include <vector>

#include "diagramkit/graph.hpp"
#include "diagramkit/linalg.hpp"
#include "oracles/oracles.hpp"

namespace support {

using diagramkit::Rational;
using diagramkit::WeightedGraph;

inline oracle::Graph to_oracle(const WeightedGraph& g) {
  oracle::Graph o;
  for (const auto& v : g.vertices()) {
    o.weight.push_back(v.weight);
    o.genus.push_back(v.genus);
  }
  for (const auto& [e, m] : g.edges()) o.edges[{static_cast<int>(e.first), static_cast<int>(e.second)}] = m;
  return o;
}

inline oracle::Matrix to_oracle(const diagramkit::SymMatrix& m) {
  oracle::Matrix out(m.dim(), std::vector<oracle::Q>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

inline oracle::Inertia to_oracle(const diagramkit::Signature& s) {
  return {static_cast<int>(s.positive), static_cast<int>(s.zero), static_cast<int>(s.negative)};
}

// Chain v1 - v2 - ... with the given weights.
inline WeightedGraph chain(const std::vector<int>& weights) {
  WeightedGraph g;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    g.add_vertex("v" + std::to_string(i + 1), weights[i]);
    if (i > 0) g.set_edge(i - 1, i);
  }
  return g;
}

inline WeightedGraph single(int weight, int genus = 0) {
  WeightedGraph g;
  g.add_vertex("a", weight, genus);
  return g;
}

struct RandomGraphSpec {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  int min_weight = 1;
  int max_weight = 4;
  int max_genus = 0;
  int max_multiplicity = 1;
  double edge_probability = 0.4;
};

inline WeightedGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> size(spec.min_vertices, spec.max_vertices);
  std::uniform_int_distribution<int> weight(spec.min_weight, spec.max_weight);
  std::uniform_int_distribution<int> genus(0, spec.max_genus);
  std::uniform_int_distribution<int> mult(1, spec.max_multiplicity);
  std::bernoulli_distribution edge(spec.edge_probability);
  WeightedGraph g;
  const std::size_t n = size(rng);
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1), weight(rng), genus(rng));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) g.set_edge(i, j, mult(rng));
    }
  }
  return g;
}

inline WeightedGraph shuffled(const WeightedGraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return g.permuted(order);
}

}  // namespace support
