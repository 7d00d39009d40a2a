#include "diagramkit/verify.hpp"

#include <random>

#include "diagramkit/canonical.hpp"
#include "diagramkit/diagram.hpp"
#include "diagramkit/star.hpp"

namespace diagramkit {

StarClosureReport verify_star_closure(const std::vector<WeightedGraph>& corpus, const Rational& eps,
                                      std::size_t random_subsets, std::uint64_t seed) {
  StarClosureReport report;
  std::mt19937_64 rng(seed);
  for (const auto& g : corpus) {
    if (!check_star(g, eps).feasible) continue;
    ++report.graphs;
    const std::string key = canonical_form(g);
    auto check_subset = [&](const std::vector<std::size_t>& subset) {
      ++report.subgraph_cases;
      if (check_star(g.induced(subset), eps).feasible) return;
      std::string desc = "subgraph {";
      for (std::size_t i : subset) desc += (desc.back() == '{' ? "" : ",") + g.vertex(i).id;
      report.violations.push_back({key, desc + "}"});
    };
    for (std::size_t drop = 0; drop < g.size(); ++drop) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i != drop) subset.push_back(i);
      }
      check_subset(subset);
    }
    std::bernoulli_distribution coin(0.5);
    for (std::size_t s = 0; s < random_subsets; ++s) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (coin(rng)) subset.push_back(i);
      }
      check_subset(subset);
    }
    for (std::size_t e = 0; e < g.size(); ++e) {
      if (!is_contractible(g, e)) continue;
      ++report.blowdown_cases;
      if (!check_star(blowdown(g, g.vertex(e).id), eps).feasible) {
        report.violations.push_back({key, "blowdown " + g.vertex(e).id});
      }
    }
  }
  return report;
}

PairSweepReport verify_pair_bounds(const std::vector<WeightedGraph>& corpus, const Rational& eps, int d) {
  PairSweepReport report;
  for (const auto& g : corpus) {
    if (!is_elliptic(g) || !check_star(g, eps).feasible) continue;
    ++report.elliptic_graphs;
    const auto audit = pair_bound_audit(g, eps, d);
    report.checks += audit.counts.size();
    if (!audit.pass) report.violations.push_back(canonical_form(g));
  }
  return report;
}

}  // namespace diagramkit
