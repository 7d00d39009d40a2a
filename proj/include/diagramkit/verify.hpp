#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diagramkit/graph.hpp"

namespace diagramkit {

struct ClosureViolation {
  std::string graph;      // canonical form
  std::string operation;  // "subgraph {...}" or "blowdown <id>"
};

struct StarClosureReport {
  std::size_t graphs = 0;
  std::size_t subgraph_cases = 0;
  std::size_t blowdown_cases = 0;
  std::vector<ClosureViolation> violations;
  bool pass() const { return violations.empty(); }
};

// For every corpus graph satisfying *(eps): all single-vertex deletions,
// `random_subsets` further random induced subgraphs (fixed seed) and every
// legal blowdown must again satisfy *(eps).
StarClosureReport verify_star_closure(const std::vector<WeightedGraph>& corpus, const Rational& eps,
                                      std::size_t random_subsets = 4, std::uint64_t seed = 20240601);

struct PairSweepReport {
  std::size_t elliptic_graphs = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;  // canonical forms
  bool pass() const { return violations.empty(); }
};

// pair_bound_audit over the elliptic members of the corpus.
PairSweepReport verify_pair_bounds(const std::vector<WeightedGraph>& corpus, const Rational& eps, int d);

}  // namespace diagramkit
