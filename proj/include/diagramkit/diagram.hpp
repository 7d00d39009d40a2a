#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diagramkit/graph.hpp"
#include "diagramkit/linalg.hpp"

namespace diagramkit {

enum class GraphKind { elliptic, parabolic, hyperbolic, indefinite_other };

std::string to_string(GraphKind k);

struct GraphClass {
  GraphKind kind = GraphKind::indefinite_other;
  bool lanner = false;  // only ever true for hyperbolic graphs
  Signature signature;
};

// Signature (0,0,r) elliptic, (0,1,r-1) parabolic, (1,0,r-1) hyperbolic.
GraphKind kind_of(const Signature& s);

GraphClass classify_graph(const WeightedGraph& g);

bool is_elliptic(const WeightedGraph& g);
bool is_hyperbolic(const WeightedGraph& g);

// Hyperbolic, and no proper vertex subset is hyperbolic. Only subsets of
// size r-1 are examined, except that a degenerate (n+ = 1, n0 > 0) subset is
// searched further, since it can still contain a hyperbolic one.
bool is_lanner(const WeightedGraph& g);

struct ShapeCheck {
  bool ok = false;
  std::string tag;  // A<n>, D<n>, E6, E7, E8 or "other"
  // Set when g is not minimal, not elliptic or not log terminal.
  std::optional<std::string> precondition_violation;
};

// Pure shape: a tree with at most one fork, of ADE type.
std::string ade_shape(const WeightedGraph& g);

ShapeCheck check_minimal_elliptic_shape(const WeightedGraph& g);

enum class NikulinCase { nu2, nu1, nu0 };

std::string to_string(NikulinCase c);
NikulinCase parse_nikulin_case(const std::string& s);

struct BoundReport {
  NikulinCase nikulin_case = NikulinCase::nu2;
  Rational c1;
  Rational c2;
  std::optional<int> d;
  Rational bound;
};

// 96 (c1 + c2/3) + {69, 70, 68} for nu = 2, 1, 0.
BoundReport nikulin_bound(NikulinCase c, const Rational& c1, const Rational& c2);

// c1 = sum_{rho=1}^{d-1} (1/2) q^rho, c2 = sum_{rho=d}^{2d-1} (1/2) q^rho,
// with q = 2/eps - 2. Requires 0 < eps <= 2/3 and d >= 1.
std::pair<Rational, Rational> pair_bound_constants(const Rational& eps, int d);

// Feeds measured d and the pair constants into the Nikulin formula. The
// result is only as good as d, which is measured, not proven.
BoundReport empirical_picard_bound(NikulinCase c, const Rational& eps, int d);

struct PairCount {
  int rho = 0;
  std::size_t pairs = 0;
  Rational bound;  // (n/2) q^rho
};

struct PairAudit {
  bool pass = true;
  std::vector<PairCount> counts;
};

// For rho = 1 .. 2d-1 checks distance_pairs(g, rho, rho) <= (n/2) q^rho.
// g must be elliptic and satisfy *(eps).
PairAudit pair_bound_audit(const WeightedGraph& g, const Rational& eps, int d);

std::size_t max_degree(const WeightedGraph& g);

}  // namespace diagramkit
