#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diagramkit/diagram.hpp"
#include "diagramkit/discrepancy.hpp"
#include "diagramkit/graph.hpp"

namespace diagramkit {

struct EnumerationOptions {
  unsigned threads = 1;
  // Maximum number of candidate graphs whose filters are evaluated.
  std::size_t budget = std::size_t{1} << 20;
  std::size_t subgraph_budget = kDefaultSubgraphBudget;
};

struct EnumerationResult {
  Rational epsilon;
  std::string family;
  // Canonicalized graphs (ids v1..vn), sorted by canonical form.
  std::vector<WeightedGraph> graphs;
  std::vector<std::string> keys;

  long max_excess = 0;  // max sum(-F^2 - 2), the empirical S1 for elliptic runs
  int max_weight = 0;
  std::size_t max_vertices = 0;
  std::size_t max_degree = 0;
  std::optional<int> max_diameter;  // over connected members

  // Search closed (frontier empty) within the step limit.
  bool exhausted = false;
  std::size_t steps = 0;
  std::size_t evaluated = 0;
};

/// All minimal elliptic log terminal graphs with at most `max_vertices`
/// vertices that satisfy *(eps), up to isomorphism.
///
/// Candidates are genus-0 trees of ADE shape with weights in
/// [2, floor(2/eps)]. Every property involved is inherited by induced
/// subgraphs, so the search grows surviving graphs one leaf at a time and
/// never misses a graph. Throws BudgetExceeded past options.budget.
EnumerationResult enumerate_minimal_elliptic_star(const Rational& eps, std::size_t max_vertices,
                                                  const EnumerationOptions& options = {});

// Level-synchronous closure of a Lanner *(eps) seed under vertex and simple
// edge blowups, keeping only Lanner *(eps) children. `max_steps` bounds the
// number of levels; exhausted reports whether the frontier emptied.
EnumerationResult lanner_blowup_search(const WeightedGraph& seed, const Rational& eps, std::size_t max_steps,
                                       const EnumerationOptions& options = {});

// The chain of three vertices with weights 1, 1 and b.
WeightedGraph lanner_chain(int b);

struct HorizonResult {
  bool found = false;
  int k = 0;                // least k with Gamma_k not Lanner
  bool persistent = false;  // Gamma_k .. Gamma_{k+5} all not Lanner
};

// Tower Gamma_1, Gamma_2, ... obtained by blowing up v, then the new vertex
// E_1, then E_2, and so on. g must be hyperbolic.
HorizonResult vertex_blowup_horizon(const WeightedGraph& g, const std::string& v, int k_max);

struct HeightAudit {
  bool pass = true;
  std::size_t graphs = 0;  // empirical S2
  int max_height = 0;
  std::size_t max_new_vertices = 0;
  bool exhausted = true;
};

// Closure of the two-vertex seed (w1)-(w2) under edge blowups only, keeping
// graphs that satisfy *(eps). Passes iff every vertex height h satisfies
// 2h <= s1.
HeightAudit edge_blowup_height_audit(const Rational& eps, const Rational& s1, int w1 = 2, int w2 = 2,
                                     std::size_t budget = std::size_t{1} << 16);

// Seed A(w1)-B(w2); blow up the edge to get E1, then blow up E1 to get E2,
// and so on up to E_k.
WeightedGraph edge_vertex_tower(int w1, int w2, int k);

struct TowerStep {
  int k = 0;
  bool log_terminal = false;
  std::vector<std::string> witness;  // ids of the violating subgraph
  std::vector<Rational> witness_log_discrepancy;
};

struct E9Report {
  int w1 = 2;
  int w2 = 2;
  std::vector<TowerStep> steps;  // k = 1..7
  std::optional<int> first_failure;
  // Log terminal for k <= 5 and not for k = 6, 7.
  bool pass = false;
};

E9Report e9_lemma_check(int w1 = 2, int w2 = 2);

struct SeedHorizon {
  int w1 = 0;
  int w2 = 0;
  std::optional<int> first_failure;
};

// First non log terminal tower index for every elliptic seed with weights
// in [1, max_weight], searching k up to k_max.
std::vector<SeedHorizon> e9_seed_sweep(int max_weight, int k_max);

struct LannerStructure {
  WeightedGraph reduced;
  bool simple_edges = false;
  bool max_degree_ok = false;  // every vertex has at most 3 neighbors
  std::string shape;           // tree, cycle, cycle+vertex or other
  bool conforms = false;
};

// Blows down weight-1 vertices while the graph stays Lanner, then reports
// whether the result is a tree, a cycle or a cycle with one more vertex,
// with simple edges and degrees <= 3.
LannerStructure lanner_structure_audit(const WeightedGraph& g);

// Deterministic corpus of at least `min_size` graphs satisfying *(eps):
// minimal elliptic graphs, their blowups, and the Lanner closure of the
// (1,1,1) chain.
std::vector<WeightedGraph> star_corpus(const Rational& eps, std::size_t min_size, const EnumerationOptions& options = {});

}  // namespace diagramkit
