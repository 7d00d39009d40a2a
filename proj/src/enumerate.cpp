#include "diagramkit/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "diagramkit/canonical.hpp"
#include "diagramkit/detail/parallel.hpp"
#include "diagramkit/errors.hpp"
#include "diagramkit/star.hpp"

namespace diagramkit {

namespace {

using ChildFn = std::function<std::vector<WeightedGraph>(const WeightedGraph&)>;
using AcceptFn = std::function<bool(const WeightedGraph&)>;

void finish_stats(EnumerationResult& r) {
  for (const auto& g : r.graphs) {
    r.max_excess = std::max(r.max_excess, g.excess());
    for (const auto& v : g.vertices()) r.max_weight = std::max(r.max_weight, v.weight);
    r.max_vertices = std::max(r.max_vertices, g.size());
    r.max_degree = std::max(r.max_degree, max_degree(g));
    if (auto d = diameter(g)) r.max_diameter = std::max(r.max_diameter.value_or(0), *d);
  }
}

// Level-synchronous search. Children of the (key-sorted) frontier are
// generated in order, deduplicated on first occurrence against everything
// already evaluated, filtered in parallel, and the survivors become the next
// frontier in key order. Output is independent of the thread count.
void closure(EnumerationResult& r, std::vector<WeightedGraph> seeds, std::size_t max_steps,
             const EnumerationOptions& options, const ChildFn& children, const AcceptFn& accept) {
  std::set<std::string> seen;
  std::map<std::string, WeightedGraph> found;
  std::vector<std::pair<std::string, WeightedGraph>> frontier;

  auto admit = [&](std::vector<WeightedGraph> candidates) {
    std::vector<std::string> keys(candidates.size());
    detail::parallel_for(candidates.size(), options.threads,
                         [&](std::size_t i) { keys[i] = canonical_form(candidates[i]); });
    std::vector<std::size_t> fresh;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (seen.insert(keys[i]).second) fresh.push_back(i);
    }
    r.evaluated += fresh.size();
    if (r.evaluated > options.budget) throw BudgetExceeded("enumeration exceeded its candidate budget", options.budget);
    std::vector<char> ok(fresh.size(), 0);
    detail::parallel_for(fresh.size(), options.threads,
                         [&](std::size_t i) { ok[i] = accept(candidates[fresh[i]]) ? 1 : 0; });
    std::vector<std::pair<std::string, WeightedGraph>> next;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      if (!ok[i]) continue;
      WeightedGraph cg = canonicalize(candidates[fresh[i]]);
      found.emplace(keys[fresh[i]], cg);
      next.emplace_back(keys[fresh[i]], std::move(cg));
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return next;
  };

  frontier = admit(std::move(seeds));
  while (!frontier.empty() && r.steps < max_steps) {
    std::vector<WeightedGraph> candidates;
    for (const auto& [key, g] : frontier) {
      for (auto& c : children(g)) candidates.push_back(std::move(c));
    }
    frontier = admit(std::move(candidates));
    ++r.steps;
  }
  r.exhausted = frontier.empty();
  for (auto& [key, g] : found) {
    r.keys.push_back(key);
    r.graphs.push_back(std::move(g));
  }
  finish_stats(r);
}

std::vector<WeightedGraph> all_blowups(const WeightedGraph& g) {
  std::vector<WeightedGraph> out;
  const std::string id = g.fresh_id("v");
  for (const auto& v : g.vertices()) out.push_back(blowup_vertex(g, v.id, id));
  for (const auto& [e, m] : g.edges()) {
    if (m == 1) out.push_back(blowup_edge(g, g.vertex(e.first).id, g.vertex(e.second).id, id));
  }
  return out;
}

int weight_cap(const Rational& eps) {
  const Rational cap = 2 / eps;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), cap.get_num_mpz_t(), cap.get_den_mpz_t());
  return static_cast<int>(fl.get_si());
}

}  // namespace

EnumerationResult enumerate_minimal_elliptic_star(const Rational& eps, std::size_t max_vertices,
                                                  const EnumerationOptions& options) {
  require_epsilon(eps);
  if (max_vertices < 1) throw PreconditionError("max_vertices must be >= 1");
  const int cap = weight_cap(eps);

  EnumerationResult r;
  r.epsilon = eps;
  r.family = "minimal-elliptic";

  std::vector<WeightedGraph> seeds;
  for (int w = 2; w <= cap; ++w) {
    WeightedGraph g;
    g.add_vertex("v1", w);
    seeds.push_back(std::move(g));
  }
  auto children = [cap](const WeightedGraph& g) {
    std::vector<WeightedGraph> out;
    const std::string id = g.fresh_id("v");
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (int w = 2; w <= cap; ++w) {
        WeightedGraph c = g;
        const std::size_t leaf = c.add_vertex(id, w);
        c.set_edge(v, leaf, 1);
        if (ade_shape(c) != "other") out.push_back(std::move(c));
      }
    }
    return out;
  };
  auto accept = [&eps, &options](const WeightedGraph& g) {
    return ade_shape(g) != "other" && is_elliptic(g) && check_star(g, eps).feasible &&
           is_log_terminal_graph(g, options.subgraph_budget).log_terminal;
  };
  closure(r, std::move(seeds), max_vertices - 1, options, children, accept);
  return r;
}

WeightedGraph lanner_chain(int b) {
  WeightedGraph g;
  g.add_vertex("a", 1);
  g.add_vertex("b", 1);
  g.add_vertex("c", b);
  g.set_edge("a", "b");
  g.set_edge("b", "c");
  return g;
}

EnumerationResult lanner_blowup_search(const WeightedGraph& seed, const Rational& eps, std::size_t max_steps,
                                       const EnumerationOptions& options) {
  require_epsilon(eps);
  if (!is_lanner(seed)) throw PreconditionError("seed is not a Lanner graph");
  if (!check_star(seed, eps).feasible) throw PreconditionError("seed does not satisfy *(eps)");

  EnumerationResult r;
  r.epsilon = eps;
  r.family = "lanner-closure";
  auto accept = [&eps](const WeightedGraph& g) { return is_lanner(g) && check_star(g, eps).feasible; };
  closure(r, {seed}, max_steps, options, all_blowups, accept);
  return r;
}

HorizonResult vertex_blowup_horizon(const WeightedGraph& g, const std::string& v, int k_max) {
  if (!is_hyperbolic(g)) throw PreconditionError("vertex blowup horizon needs a hyperbolic graph");
  g.index_of(v);
  HorizonResult out;
  WeightedGraph current = g;
  std::string top = v;
  auto advance = [&] {
    const std::string id = current.fresh_id("E");
    current = blowup_vertex(current, top, id);
    top = id;
  };
  for (int k = 1; k <= k_max; ++k) {
    advance();
    if (is_lanner(current)) continue;
    out.found = true;
    out.k = k;
    out.persistent = true;
    for (int extra = 1; extra <= 5; ++extra) {
      advance();
      if (is_lanner(current)) out.persistent = false;
    }
    break;
  }
  return out;
}

HeightAudit edge_blowup_height_audit(const Rational& eps, const Rational& s1, int w1, int w2, std::size_t budget) {
  require_epsilon(eps);
  struct Node {
    WeightedGraph g;
    std::vector<int> height;
  };
  WeightedGraph seed;
  seed.add_vertex("A", w1);
  seed.add_vertex("B", w2);
  seed.set_edge("A", "B");
  if (!is_elliptic(seed)) throw PreconditionError("edge blowup seed must be elliptic");

  HeightAudit audit;
  std::set<std::string> seen{canonical_form(seed)};
  std::vector<Node> frontier;
  if (check_star(seed, eps).feasible) {
    frontier.push_back({seed, {0, 0}});
    audit.graphs = 1;
  }
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (const auto& [e, m] : node.g.edges()) {
        if (m != 1) continue;
        const std::string id = node.g.fresh_id("E");
        Node child{blowup_edge(node.g, node.g.vertex(e.first).id, node.g.vertex(e.second).id, id), node.height};
        child.height.push_back(std::max(node.height[e.first], node.height[e.second]) + 1);
        if (!seen.insert(canonical_form(child.g)).second) continue;
        if (seen.size() > budget) {
          audit.exhausted = false;
          audit.pass = false;
          return audit;
        }
        if (!check_star(child.g, eps).feasible) continue;
        ++audit.graphs;
        audit.max_new_vertices = std::max(audit.max_new_vertices, child.g.size() - 2);
        for (int h : child.height) {
          audit.max_height = std::max(audit.max_height, h);
          if (2 * Rational(h) > s1) audit.pass = false;
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return audit;
}

WeightedGraph edge_vertex_tower(int w1, int w2, int k) {
  WeightedGraph g;
  g.add_vertex("A", w1);
  g.add_vertex("B", w2);
  g.set_edge("A", "B");
  if (k < 1) return g;
  g = blowup_edge(g, "A", "B", "E1");
  for (int j = 2; j <= k; ++j) g = blowup_vertex(g, "E" + std::to_string(j - 1), "E" + std::to_string(j));
  return g;
}

E9Report e9_lemma_check(int w1, int w2) {
  E9Report rep;
  rep.w1 = w1;
  rep.w2 = w2;
  for (int k = 1; k <= 7; ++k) {
    const WeightedGraph g = edge_vertex_tower(w1, w2, k);
    const auto lt = is_log_terminal_graph(g);
    TowerStep step{k, lt.log_terminal, {}, lt.witness_log_discrepancy};
    for (std::size_t i : lt.witness) step.witness.push_back(g.vertex(i).id);
    if (!lt.log_terminal && !rep.first_failure) rep.first_failure = k;
    rep.steps.push_back(std::move(step));
  }
  rep.pass = true;
  for (const auto& s : rep.steps) {
    const bool expected = s.k <= 5;
    if (s.log_terminal != expected) rep.pass = false;
  }
  return rep;
}

std::vector<SeedHorizon> e9_seed_sweep(int max_weight, int k_max) {
  std::vector<SeedHorizon> out;
  for (int w1 = 1; w1 <= max_weight; ++w1) {
    for (int w2 = w1; w2 <= max_weight; ++w2) {
      if (!is_elliptic(edge_vertex_tower(w1, w2, 0))) continue;
      SeedHorizon s{w1, w2, std::nullopt};
      for (int k = 1; k <= k_max && !s.first_failure; ++k) {
        if (!is_log_terminal_graph(edge_vertex_tower(w1, w2, k)).log_terminal) s.first_failure = k;
      }
      out.push_back(s);
    }
  }
  return out;
}

LannerStructure lanner_structure_audit(const WeightedGraph& g) {
  LannerStructure out;
  out.reduced = g;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < out.reduced.size(); ++i) {
      if (!is_contractible(out.reduced, i)) continue;
      WeightedGraph smaller = blowdown(out.reduced, out.reduced.vertex(i).id);
      if (!is_lanner(smaller)) continue;
      out.reduced = std::move(smaller);
      changed = true;
      break;
    }
  }
  const WeightedGraph& r = out.reduced;
  out.simple_edges = std::all_of(r.edges().begin(), r.edges().end(), [](const auto& e) { return e.second == 1; });
  out.max_degree_ok = max_degree(r) <= 3;
  const std::size_t n = r.size();
  const std::size_t m = r.edges().size();
  out.shape = "other";
  if (is_connected(r)) {
    if (m + 1 == n) {
      out.shape = "tree";
    } else if (m == n) {
      bool all_two = true;
      for (std::size_t v = 0; v < n; ++v) all_two = all_two && r.degree(v) == 2;
      if (all_two) {
        out.shape = "cycle";
      } else {
        for (std::size_t v = 0; v < n; ++v) {
          if (r.degree(v) != 1) continue;
          const WeightedGraph rest = r.without(v);
          bool cycle = is_connected(rest);
          for (std::size_t u = 0; u < rest.size(); ++u) cycle = cycle && rest.degree(u) == 2;
          if (cycle) out.shape = "cycle+vertex";
        }
      }
    }
  }
  out.conforms = out.simple_edges && out.max_degree_ok && out.shape != "other";
  return out;
}

std::vector<WeightedGraph> star_corpus(const Rational& eps, std::size_t min_size, const EnumerationOptions& options) {
  require_epsilon(eps);
  std::map<std::string, WeightedGraph> corpus;
  auto absorb = [&corpus](const EnumerationResult& r) {
    for (std::size_t i = 0; i < r.graphs.size(); ++i) corpus.emplace(r.keys[i], r.graphs[i]);
  };

  const auto minimal = enumerate_minimal_elliptic_star(eps, 5, options);
  absorb(minimal);

  const WeightedGraph seed = lanner_chain(1);
  if (check_star(seed, eps).feasible) absorb(lanner_blowup_search(seed, eps, 16, options));

  // Elliptic blowups of the minimal graphs, level by level, until the
  // corpus is large enough.
  std::vector<WeightedGraph> frontier = minimal.graphs;
  std::set<std::string> seen(minimal.keys.begin(), minimal.keys.end());
  for (int level = 0; level < 6 && corpus.size() < min_size && !frontier.empty(); ++level) {
    std::vector<std::pair<std::string, WeightedGraph>> next;
    for (const auto& g : frontier) {
      for (auto& c : all_blowups(g)) {
        std::string key = canonical_form(c);
        if (!seen.insert(key).second) continue;
        if (!check_star(c, eps).feasible) continue;
        next.emplace_back(std::move(key), canonicalize(c));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    frontier.clear();
    for (auto& [key, g] : next) {
      frontier.push_back(g);
      corpus.emplace(key, std::move(g));
    }
  }

  std::vector<WeightedGraph> out;
  out.reserve(corpus.size());
  for (auto& [key, g] : corpus) out.push_back(std::move(g));
  return out;
}

}  // namespace diagramkit
