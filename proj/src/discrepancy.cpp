#include "diagramkit/discrepancy.hpp"
#include "diagramkit/star.hpp"

#include <algorithm>

namespace diagramkit {

namespace {

DiscrepancyResult solve_for(const SymMatrix& m, const std::vector<Rational>& k) {
  std::vector<Rational> rhs(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) rhs[i] = -k[i];
  auto sol = solve_linear(m, rhs);
  if (auto* report = std::get_if<SingularReport>(&sol)) return *report;
  DiscrepancyVector out;
  out.codiscrepancy = std::get<std::vector<Rational>>(std::move(sol));
  out.log_discrepancy.reserve(out.codiscrepancy.size());
  for (const auto& b : out.codiscrepancy) out.log_discrepancy.push_back(1 - b);
  return out;
}

}  // namespace

DiscrepancyResult log_discrepancies(const WeightedGraph& g) {
  // (K + sum b_i F_i).F_j = K_j + sum_i b_i (F_i.F_j) = 0, i.e. M b = -K.
  return solve_for(intersection_matrix(g), canonical_class(g));
}

bool resubstitutes(const WeightedGraph& g, const std::vector<Rational>& codiscrepancy) {
  if (codiscrepancy.size() != g.size()) return false;
  const auto mb = intersection_matrix(g).multiply(codiscrepancy);
  const auto k = canonical_class(g);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (k[j] + mb[j] != 0) return false;
  }
  return true;
}

std::string to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::terminal: return "terminal";
    case SingularityClass::canonical: return "canonical";
    case SingularityClass::eps_log_terminal: return "eps_log_terminal";
    case SingularityClass::eps_log_canonical: return "eps_log_canonical";
    case SingularityClass::kawamata_log_terminal: return "kawamata_log_terminal";
    case SingularityClass::log_canonical: return "log_canonical";
    case SingularityClass::none_of_these: return "none_of_these";
  }
  return "none_of_these";
}

SingularityReport classify_singularity(const WeightedGraph& g, const Rational& eps, CanonicalReading reading) {
  require_epsilon(eps);
  SingularityReport r;
  if (g.empty()) {
    r.min_log_discrepancy = 1;
  } else {
    auto res = log_discrepancies(g);
    if (auto* report = std::get_if<SingularReport>(&res)) throw SingularSystem(*report);
    const auto& f = std::get<DiscrepancyVector>(res).log_discrepancy;
    r.min_log_discrepancy = *std::min_element(f.begin(), f.end());
  }
  const Rational& m = r.min_log_discrepancy;
  const Rational threshold = reading == CanonicalReading::discrepancy ? Rational(1) : Rational(0);
  r.terminal = m > threshold;
  r.canonical = m >= threshold;
  r.kawamata_log_terminal = m > 0;
  r.log_canonical = m >= 0;
  r.eps_log_terminal = m > eps;
  r.eps_log_canonical = m >= eps;

  const std::pair<bool, SingularityClass> order[] = {
      {r.terminal, SingularityClass::terminal},
      {r.canonical, SingularityClass::canonical},
      {r.eps_log_terminal, SingularityClass::eps_log_terminal},
      {r.eps_log_canonical, SingularityClass::eps_log_canonical},
      {r.kawamata_log_terminal, SingularityClass::kawamata_log_terminal},
      {r.log_canonical, SingularityClass::log_canonical},
  };
  for (const auto& [holds, cls] : order) {
    if (holds) {
      r.strongest = cls;
      break;
    }
  }
  return r;
}

LogTerminalResult is_log_terminal_graph(const WeightedGraph& g, std::size_t budget) {
  LogTerminalResult result;
  const SymMatrix full = intersection_matrix(g);
  const std::vector<Rational> k = canonical_class(g);

  auto better = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };

  for_each_connected_subset(g, [&](const std::vector<std::size_t>& subset) {
    if (++result.evaluated > budget) throw BudgetExceeded("log terminal check: too many connected subgraphs", budget);
    if (!result.log_terminal && !better(subset, result.witness)) return true;
    const SymMatrix m = full.principal(subset);
    if (!is_negative_definite(m)) return true;
    std::vector<Rational> ks;
    ks.reserve(subset.size());
    for (std::size_t i : subset) ks.push_back(k[i]);
    auto res = solve_for(m, ks);
    const auto& f = std::get<DiscrepancyVector>(res).log_discrepancy;
    if (std::all_of(f.begin(), f.end(), [](const Rational& x) { return x > 0; })) return true;
    result.log_terminal = false;
    result.witness = subset;
    result.witness_log_discrepancy = f;
    return true;
  });
  return result;
}

}  // namespace diagramkit
