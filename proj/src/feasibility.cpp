#include "diagramkit/feasibility.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace diagramkit {

namespace {

struct Row {
  std::vector<Rational> a;
  Rational b;
  boost::dynamic_bitset<> origin;
};

// Scale so the first nonzero coefficient has absolute value 1; rows with the
// same direction then compare equal on `a`.
void normalize(Row& row) {
  for (const auto& c : row.a) {
    if (c == 0) continue;
    const Rational s = abs(c);
    if (s != 1) {
      for (auto& x : row.a) x /= s;
      row.b /= s;
    }
    return;
  }
}

bool all_zero(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; });
}

// Per direction, drops a row when another row is at least as tight and has
// no larger history; dropping by bound alone would defeat the history test.
// Returns false on a contradictory constant row (0 <= b < 0).
bool compact(std::vector<Row>& rows) {
  std::map<std::vector<Rational>, std::vector<Row>> best;
  for (auto& r : rows) {
    if (all_zero(r.a)) {
      if (r.b < 0) return false;
      continue;
    }
    auto& kept = best[r.a];
    const auto count = r.origin.count();
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Row& k) {
      return k.b <= r.b && k.origin.count() <= count;
    });
    if (dominated) continue;
    std::erase_if(kept, [&](const Row& k) { return r.b <= k.b && count <= k.origin.count(); });
    kept.push_back(std::move(r));
  }
  rows.clear();
  for (auto& [key, list] : best) {
    for (auto& r : list) rows.push_back(std::move(r));
  }
  return true;
}

}  // namespace

bool satisfies(const std::vector<LinearConstraint>& constraints, const std::vector<Interval>& box,
               const std::vector<Rational>& x) {
  if (x.size() != box.size()) return false;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (x[i] < box[i].lo || x[i] > box[i].hi) return false;
  }
  for (const auto& c : constraints) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) lhs += c.coeffs[i] * x[i];
    if (lhs > c.bound) return false;
  }
  return true;
}

namespace {

// Returns nullopt when the pruned projection produced a point that fails the
// original system.
std::optional<FeasibilityResult> eliminate(const std::vector<LinearConstraint>& constraints,
                                           const std::vector<Interval>& box, bool prune) {
  const std::size_t n = box.size();
  for (const auto& c : constraints) {
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint length differs from box length");
  }
  for (const auto& iv : box) {
    if (iv.lo > iv.hi) throw std::invalid_argument("box interval with lo > hi");
  }

  if (n == 0) {
    for (const auto& c : constraints) {
      if (c.bound < 0) return FeasibilityResult{FeasibilityStatus::degenerate, {}};
    }
    return FeasibilityResult{FeasibilityStatus::feasible, {}};
  }

  const std::size_t origins = constraints.size() + 2 * n;
  std::vector<Row> rows;
  rows.reserve(origins);
  for (const auto& c : constraints) {
    Row r{c.coeffs, c.bound, boost::dynamic_bitset<>(origins)};
    r.origin.set(rows.size());
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Row upper{std::vector<Rational>(n), box[i].hi, boost::dynamic_bitset<>(origins)};
    upper.a[i] = 1;
    upper.origin.set(rows.size());
    rows.push_back(std::move(upper));
    Row lower{std::vector<Rational>(n), -box[i].lo, boost::dynamic_bitset<>(origins)};
    lower.a[i] = -1;
    lower.origin.set(rows.size());
    rows.push_back(std::move(lower));
  }
  for (auto& r : rows) normalize(r);
  if (!compact(rows)) return FeasibilityResult{FeasibilityStatus::infeasible, {}};

  std::vector<bool> eliminated(n, false);
  std::vector<std::size_t> order;
  std::vector<std::vector<Row>> stage_rows;  // rows touching order[t] at step t

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t var = n;
    long long best_cost = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      std::size_t pos = 0;
      std::size_t neg = 0;
      for (const auto& r : rows) {
        if (r.a[v] > 0) ++pos;
        if (r.a[v] < 0) ++neg;
      }
      // Net change in row count.
      const auto cost = static_cast<long long>(pos * neg) - static_cast<long long>(pos + neg);
      if (var == n || cost < best_cost) {
        var = v;
        best_cost = cost;
      }
    }

    std::vector<Row> pos;
    std::vector<Row> neg;
    std::vector<Row> rest;
    for (auto& r : rows) {
      if (r.a[var] > 0) {
        pos.push_back(std::move(r));
      } else if (r.a[var] < 0) {
        neg.push_back(std::move(r));
      } else {
        rest.push_back(std::move(r));
      }
    }

    const std::size_t limit = step + 2;  // Imbert: |origin| <= eliminated + 1
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Row c{std::vector<Rational>(n), 0, p.origin | q.origin};
        if (prune && c.origin.count() > limit) continue;
        const Rational sp = -q.a[var];  // > 0
        const Rational sq = p.a[var];   // > 0
        for (std::size_t i = 0; i < n; ++i) c.a[i] = sp * p.a[i] + sq * q.a[i];
        c.a[var] = 0;
        c.b = sp * p.b + sq * q.b;
        normalize(c);
        rest.push_back(std::move(c));
      }
    }

    std::vector<Row> touching;
    touching.reserve(pos.size() + neg.size());
    for (auto& r : pos) touching.push_back(std::move(r));
    for (auto& r : neg) touching.push_back(std::move(r));
    stage_rows.push_back(std::move(touching));
    order.push_back(var);
    eliminated[var] = true;

    rows = std::move(rest);
    if (!compact(rows)) return FeasibilityResult{FeasibilityStatus::infeasible, {}};
  }

  // Back-substitution in reverse elimination order.
  std::vector<Rational> x(n);
  for (std::size_t t = n; t-- > 0;) {
    const std::size_t var = order[t];
    bool have_lo = false;
    Rational lo;
    for (const auto& r : stage_rows[t]) {
      Rational rest = r.b;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != var && r.a[i] != 0) rest -= r.a[i] * x[i];
      }
      const Rational value = rest / r.a[var];
      if (r.a[var] < 0 && (!have_lo || value > lo)) {
        lo = value;
        have_lo = true;
      }
    }
    // The box lower bound may have been merged away only by a tighter row,
    // so a lower bound is always present.
    x[var] = have_lo ? lo : box[var].lo;
  }

  if (!satisfies(constraints, box, x)) return std::nullopt;
  return FeasibilityResult{FeasibilityStatus::feasible, std::move(x)};
}

}  // namespace

FeasibilityResult feasible_box_lp(const std::vector<LinearConstraint>& constraints,
                                  const std::vector<Interval>& box) {
  // Imbert's history test only removes rows, so an infeasible verdict is
  // always sound; a feasible one is re-verified and, if need be, recomputed
  // without pruning.
  if (auto r = eliminate(constraints, box, true)) return *std::move(r);
  if (auto r = eliminate(constraints, box, false)) return *std::move(r);
  throw std::logic_error("Fourier-Motzkin witness failed re-verification");
}

}  // namespace diagramkit
