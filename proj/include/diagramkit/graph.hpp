#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diagramkit/linalg.hpp"
#include "diagramkit/rational.hpp"

namespace diagramkit {

struct Vertex {
  std::string id;
  int weight = 1;  // -F^2
  int genus = 0;   // arithmetic genus p_a(F)

  bool operator==(const Vertex&) const = default;
};

/// Weighted graph of a finite set of exceptional curves.
///
/// Vertices keep insertion order. Edges are stored once per unordered pair
/// of vertex positions with a positive multiplicity (the intersection number
/// F_i.F_j); an absent pair means the curves are disjoint. Invariants: ids
/// are unique, weights >= 1, genera >= 0, no self-edges.
class WeightedGraph {
 public:
  using EdgeKey = std::pair<std::size_t, std::size_t>;  // first < second

  WeightedGraph() = default;

  std::size_t add_vertex(std::string id, int weight, int genus = 0);
  // Sets the multiplicity of u-v; 0 removes the edge.
  void set_edge(const std::string& u, const std::string& v, int multiplicity = 1);
  void set_edge(std::size_t u, std::size_t v, int multiplicity = 1);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::map<EdgeKey, int>& edges() const { return edges_; }

  std::optional<std::size_t> find(const std::string& id) const;
  std::size_t index_of(const std::string& id) const;  // throws GraphError
  bool contains(const std::string& id) const { return find(id).has_value(); }

  int multiplicity(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

  // Induced subgraph on the given positions; keeps their relative order.
  WeightedGraph induced(std::span<const std::size_t> subset) const;
  WeightedGraph without(std::size_t v) const;
  // Vertex i of the result is vertex order[i] of this graph.
  WeightedGraph permuted(std::span<const std::size_t> order) const;

  void set_weight(std::size_t v, int weight);

  // Sum over vertices of (weight - 2), i.e. sum(-F^2 - 2).
  long excess() const;

  // An id not yet present, of the form prefix + number.
  std::string fresh_id(const std::string& prefix = "E") const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  void check_index(std::size_t v) const;

  std::vector<Vertex> vertices_;
  std::map<EdgeKey, int> edges_;
  std::map<std::string, std::size_t> index_;
};

SymMatrix intersection_matrix(const WeightedGraph& g);

// K.F_i = weight_i - 2 + 2 genus_i
std::vector<Rational> canonical_class(const WeightedGraph& g);

WeightedGraph blowup_vertex(const WeightedGraph& g, const std::string& v, const std::string& new_id);
WeightedGraph blowup_edge(const WeightedGraph& g, const std::string& u, const std::string& v,
                          const std::string& new_id);

// Empty when e may be blown down, otherwise the reason it may not.
std::optional<std::string> contractibility_problem(const WeightedGraph& g, std::size_t e);
bool is_contractible(const WeightedGraph& g, std::size_t e);

WeightedGraph blowdown(const WeightedGraph& g, const std::string& e);

bool is_minimal(const WeightedGraph& g);

struct BlowdownStep {
  std::string removed;
  std::vector<std::string> neighbors;
};

struct Reduction {
  WeightedGraph graph;
  std::vector<BlowdownStep> steps;
};

// Blows down contractible vertices until none is left. Without a generator
// the lowest-position candidate goes first; with one, a uniformly random
// candidate.
Reduction reduce_to_minimal(const WeightedGraph& g, std::mt19937_64* rng = nullptr);

// Unordered pairs at shortest-path distance within [rho_min, rho_max]; edge
// multiplicities are ignored and unreachable pairs are skipped.
std::size_t distance_pairs(const WeightedGraph& g, int rho_min, int rho_max);

// Largest finite distance; nullopt for a disconnected graph.
std::optional<int> diameter(const WeightedGraph& g);

// All-pairs hop distances, -1 when unreachable.
std::vector<std::vector<int>> distance_matrix(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);
bool is_tree(const WeightedGraph& g);

}  // namespace diagramkit
