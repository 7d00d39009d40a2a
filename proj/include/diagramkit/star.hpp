#pragma once

#include <span>
#include <string>
#include <vector>

#include "diagramkit/graph.hpp"

namespace diagramkit {

struct StarCertificate {
  Rational epsilon;
  bool feasible = false;
  std::vector<Rational> witness;  // b_i, present iff feasible
};

// Condition *(eps): some 0 <= b_i <= 1 - eps with (K + sum b_i F_i).F_j <= 0
// for every vertex F_j. Requires 0 < eps <= 1.
StarCertificate check_star(const WeightedGraph& g, const Rational& eps);

// Exact re-verification of a coefficient vector.
bool verify_star_witness(const WeightedGraph& g, const Rational& eps, const std::vector<Rational>& b);

// *(eps) for the induced subgraph on `subset`; g itself must satisfy *(eps).
bool star_closure_subgraph(const WeightedGraph& g, const Rational& eps, std::span<const std::size_t> subset);

// *(eps) after blowing down `e`; g itself must satisfy *(eps).
bool star_closure_blowdown(const WeightedGraph& g, const Rational& eps, const std::string& e);

void require_epsilon(const Rational& eps);

}  // namespace diagramkit
