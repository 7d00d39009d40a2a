#include "diagramkit/diagram.hpp"

#include <algorithm>
#include <set>

#include "diagramkit/discrepancy.hpp"
#include "diagramkit/errors.hpp"
#include "diagramkit/star.hpp"

namespace diagramkit {

std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::elliptic: return "elliptic";
    case GraphKind::parabolic: return "parabolic";
    case GraphKind::hyperbolic: return "hyperbolic";
    case GraphKind::indefinite_other: return "indefinite_other";
  }
  return "indefinite_other";
}

GraphKind kind_of(const Signature& s) {
  if (s.positive == 0 && s.zero == 0) return GraphKind::elliptic;
  if (s.positive == 0 && s.zero == 1) return GraphKind::parabolic;
  if (s.positive == 1 && s.zero == 0) return GraphKind::hyperbolic;
  return GraphKind::indefinite_other;
}

namespace {

// Is some nonempty subset of `subset` (the set itself excluded when
// `proper`) hyperbolic? Any subset of a matrix with n+ <= 1 has n+ <= 1;
// subsets of an n+ = 0 set are never hyperbolic.
bool contains_hyperbolic(const SymMatrix& m, const std::vector<std::size_t>& subset, bool proper,
                         std::set<std::vector<std::size_t>>& seen) {
  if (!seen.insert(subset).second) return false;
  const Signature s = signature(m.principal(subset));
  if (s.positive == 0) return false;
  if (!proper && s.positive == 1 && s.zero == 0) return true;
  for (std::size_t drop = 0; drop < subset.size(); ++drop) {
    std::vector<std::size_t> smaller;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i != drop) smaller.push_back(subset[i]);
    }
    if (!smaller.empty() && contains_hyperbolic(m, smaller, false, seen)) return true;
  }
  return false;
}

}  // namespace

bool is_lanner(const WeightedGraph& g) {
  const SymMatrix m = intersection_matrix(g);
  if (kind_of(signature(m)) != GraphKind::hyperbolic) return false;
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen;
  return !contains_hyperbolic(m, all, true, seen);
}

GraphClass classify_graph(const WeightedGraph& g) {
  GraphClass c;
  c.signature = signature(intersection_matrix(g));
  c.kind = kind_of(c.signature);
  c.lanner = c.kind == GraphKind::hyperbolic && is_lanner(g);
  return c;
}

bool is_elliptic(const WeightedGraph& g) { return is_negative_definite(intersection_matrix(g)); }

bool is_hyperbolic(const WeightedGraph& g) { return kind_of(signature(intersection_matrix(g))) == GraphKind::hyperbolic; }

std::size_t max_degree(const WeightedGraph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::string ade_shape(const WeightedGraph& g) {
  if (!is_tree(g)) return "other";
  const std::size_t n = g.size();
  std::vector<std::size_t> forks;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d > 3) return "other";
    if (d == 3) forks.push_back(v);
  }
  if (forks.empty()) return "A" + std::to_string(n);
  if (forks.size() > 1) return "other";
  // Arm lengths from the fork.
  const auto dist = distance_matrix(g);
  std::vector<std::size_t> arms;
  for (std::size_t start : g.neighbors(forks[0])) {
    std::size_t len = 0;
    for (std::size_t v = 0; v < n; ++v) {
      // v lies on the arm through `start` iff the path to the fork passes it.
      if (v != forks[0] && dist[forks[0]][v] == dist[forks[0]][start] + dist[start][v]) ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return "other";
}

ShapeCheck check_minimal_elliptic_shape(const WeightedGraph& g) {
  ShapeCheck out;
  if (!is_minimal(g)) {
    out.precondition_violation = "graph is not minimal";
  } else if (!is_elliptic(g)) {
    out.precondition_violation = "graph is not elliptic";
  } else if (!is_log_terminal_graph(g).log_terminal) {
    out.precondition_violation = "graph is not log terminal";
  }
  out.tag = ade_shape(g);
  out.ok = out.tag != "other";
  return out;
}

std::string to_string(NikulinCase c) {
  switch (c) {
    case NikulinCase::nu2: return "nu2";
    case NikulinCase::nu1: return "nu1";
    case NikulinCase::nu0: return "nu0";
  }
  return "nu2";
}

NikulinCase parse_nikulin_case(const std::string& s) {
  if (s == "nu2") return NikulinCase::nu2;
  if (s == "nu1") return NikulinCase::nu1;
  if (s == "nu0") return NikulinCase::nu0;
  throw std::invalid_argument("unknown case '" + s + "' (expected nu2, nu1 or nu0)");
}

BoundReport nikulin_bound(NikulinCase c, const Rational& c1, const Rational& c2) {
  if (c1 < 0 || c2 < 0) throw PreconditionError("c1 and c2 must be nonnegative");
  int constant = 69;
  if (c == NikulinCase::nu1) constant = 70;
  if (c == NikulinCase::nu0) constant = 68;
  BoundReport r{c, c1, c2, std::nullopt, 96 * (c1 + c2 / 3) + constant};
  return r;
}

std::pair<Rational, Rational> pair_bound_constants(const Rational& eps, int d) {
  if (eps <= 0 || eps > Rational(2, 3)) {
    throw PreconditionError("pair bound constants need 0 < eps <= 2/3, got " + to_string(eps));
  }
  if (d < 1) throw PreconditionError("d must be >= 1");
  const Rational q = 2 / eps - 2;
  Rational c1 = 0;
  Rational c2 = 0;
  for (int rho = 1; rho <= d - 1; ++rho) c1 += pow(q, static_cast<unsigned>(rho)) / 2;
  for (int rho = d; rho <= 2 * d - 1; ++rho) c2 += pow(q, static_cast<unsigned>(rho)) / 2;
  return {c1, c2};
}

BoundReport empirical_picard_bound(NikulinCase c, const Rational& eps, int d) {
  const auto [c1, c2] = pair_bound_constants(eps, d);
  BoundReport r = nikulin_bound(c, c1, c2);
  r.d = d;
  return r;
}

PairAudit pair_bound_audit(const WeightedGraph& g, const Rational& eps, int d) {
  if (d < 1) throw PreconditionError("d must be >= 1");
  if (!is_elliptic(g)) throw PreconditionError("pair bound audit needs an elliptic graph");
  if (!check_star(g, eps).feasible) throw PreconditionError("pair bound audit needs a graph satisfying *(eps)");
  const Rational q = 2 / eps - 2;
  const Rational half_n = Rational(static_cast<long>(g.size())) / 2;
  PairAudit audit;
  for (int rho = 1; rho <= 2 * d - 1; ++rho) {
    PairCount pc{rho, distance_pairs(g, rho, rho), half_n * pow(q, static_cast<unsigned>(rho))};
    if (Rational(static_cast<long>(pc.pairs)) > pc.bound) audit.pass = false;
    audit.counts.push_back(std::move(pc));
  }
  return audit;
}

}  // namespace diagramkit
