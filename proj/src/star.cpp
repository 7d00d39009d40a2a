#include "diagramkit/star.hpp"

#include "diagramkit/errors.hpp"
#include "diagramkit/feasibility.hpp"

namespace diagramkit {

void require_epsilon(const Rational& eps) {
  if (eps <= 0 || eps > 1) throw PreconditionError("epsilon must satisfy 0 < eps <= 1, got " + to_string(eps));
}

StarCertificate check_star(const WeightedGraph& g, const Rational& eps) {
  require_epsilon(eps);
  const SymMatrix m = intersection_matrix(g);
  const auto k = canonical_class(g);
  const std::size_t n = g.size();

  // Row j: sum_i (F_i.F_j) b_i <= -K.F_j
  std::vector<LinearConstraint> rows(n);
  for (std::size_t j = 0; j < n; ++j) {
    rows[j].coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) rows[j].coeffs[i] = m(i, j);
    rows[j].bound = -k[j];
  }
  const std::vector<Interval> box(n, Interval{Rational(0), 1 - eps});

  StarCertificate cert{eps, false, {}};
  auto res = feasible_box_lp(rows, box);
  if (res.feasible()) {
    cert.feasible = true;
    cert.witness = std::move(res.witness);
    if (!verify_star_witness(g, eps, cert.witness)) throw std::logic_error("star witness failed re-verification");
  }
  return cert;
}

bool verify_star_witness(const WeightedGraph& g, const Rational& eps, const std::vector<Rational>& b) {
  if (b.size() != g.size()) return false;
  for (const auto& x : b) {
    if (x < 0 || x > 1 - eps) return false;
  }
  const auto mb = intersection_matrix(g).multiply(b);
  const auto k = canonical_class(g);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (k[j] + mb[j] > 0) return false;
  }
  return true;
}

bool star_closure_subgraph(const WeightedGraph& g, const Rational& eps, std::span<const std::size_t> subset) {
  if (!check_star(g, eps).feasible) throw PreconditionError("graph does not satisfy *(eps)");
  return check_star(g.induced(subset), eps).feasible;
}

bool star_closure_blowdown(const WeightedGraph& g, const Rational& eps, const std::string& e) {
  if (!check_star(g, eps).feasible) throw PreconditionError("graph does not satisfy *(eps)");
  return check_star(blowdown(g, e), eps).feasible;
}

}  // namespace diagramkit
