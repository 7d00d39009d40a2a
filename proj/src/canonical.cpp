#include "diagramkit/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace diagramkit {

namespace {

using Coloring = std::vector<int>;

struct Search {
  const WeightedGraph& g;
  std::vector<std::vector<std::pair<std::size_t, int>>> adj;
  std::vector<long> best_code;
  std::vector<std::size_t> best_order;

  explicit Search(const WeightedGraph& graph) : g(graph), adj(graph.size()) {
    for (const auto& [e, m] : graph.edges()) {
      adj[e.first].emplace_back(e.second, m);
      adj[e.second].emplace_back(e.first, m);
    }
  }

  static int count_colors(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  // Relabels by sorted key; keys start with the old color so the result
  // refines the input partition.
  template <class Key>
  static Coloring recolor(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Coloring out(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v) {
      out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    }
    return out;
  }

  Coloring refine(Coloring c) const {
    using Key = std::pair<int, std::vector<std::pair<int, int>>>;
    for (;;) {
      std::vector<Key> keys(c.size());
      for (std::size_t v = 0; v < c.size(); ++v) {
        keys[v].first = c[v];
        for (const auto& [u, m] : adj[v]) keys[v].second.emplace_back(c[u], m);
        std::sort(keys[v].second.begin(), keys[v].second.end());
      }
      Coloring next = recolor(keys);
      if (count_colors(next) == count_colors(c)) return next;
      c = std::move(next);
    }
  }

  std::vector<long> code(const std::vector<std::size_t>& order) const {
    std::vector<long> out;
    const std::size_t n = order.size();
    out.reserve(1 + 2 * n + n * (n - 1) / 2);
    out.push_back(static_cast<long>(n));
    for (std::size_t v : order) {
      out.push_back(g.vertex(v).weight);
      out.push_back(g.vertex(v).genus);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) out.push_back(g.multiplicity(order[i], order[j]));
    }
    return out;
  }

  void explore(const Coloring& c) {
    const int k = count_colors(c);
    const std::size_t n = c.size();
    if (static_cast<std::size_t>(k) == n) {
      std::vector<std::size_t> order(n);
      for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(c[v])] = v;
      auto cd = code(order);
      if (best_order.empty() || cd < best_code) {
        best_code = std::move(cd);
        best_order = std::move(order);
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> cell_size(static_cast<std::size_t>(k), 0);
    for (int col : c) ++cell_size[static_cast<std::size_t>(col)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] < 2) ++target;
    for (std::size_t v = 0; v < n; ++v) {
      if (c[v] != target) continue;
      std::vector<std::pair<int, int>> keys(n);
      for (std::size_t w = 0; w < n; ++w) keys[w] = {c[w], w == v ? 0 : 1};
      explore(refine(recolor(keys)));
    }
  }
};

}  // namespace

std::vector<std::size_t> canonical_order(const WeightedGraph& g) {
  if (g.empty()) return {};
  Search s(g);
  std::vector<std::pair<int, int>> keys(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) keys[v] = {g.vertex(v).weight, g.vertex(v).genus};
  s.explore(s.refine(Search::recolor(keys)));
  return s.best_order;
}

std::string canonical_form(const WeightedGraph& g) {
  const auto order = canonical_order(g);
  std::string out = std::to_string(order.size()) + ":";
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& v = g.vertex(order[i]);
    if (i) out += ',';
    out += std::to_string(v.weight) + "/" + std::to_string(v.genus);
  }
  out += ':';
  bool first = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const int m = g.multiplicity(order[i], order[j]);
      if (m == 0) continue;
      if (!first) out += ',';
      first = false;
      out += std::to_string(i) + "-" + std::to_string(j);
      if (m != 1) out += "x" + std::to_string(m);
    }
  }
  return out;
}

WeightedGraph canonicalize(const WeightedGraph& g) {
  const auto order = canonical_order(g);
  WeightedGraph out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& v = g.vertex(order[i]);
    out.add_vertex("v" + std::to_string(i + 1), v.weight, v.genus);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const int m = g.multiplicity(order[i], order[j]);
      if (m) out.set_edge(i, j, m);
    }
  }
  return out;
}

}  // namespace diagramkit
