#pragma once

#include <algorithm>
#include <vector>

#include "diagramkit/graph.hpp"

namespace diagramkit {

namespace detail {

// Grows `current` (whose minimum vertex is `root`) from the extension set,
// only ever adding vertices > root that are not adjacent to an earlier
// excluded choice. Each connected set is produced once.
template <class Visit>
bool grow_connected(const std::vector<std::vector<std::size_t>>& adj, std::size_t root,
                    std::vector<std::size_t>& current, std::vector<char>& blocked,
                    std::vector<std::size_t> extension, Visit& visit) {
  {
    std::vector<std::size_t> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    if (!visit(sorted)) return false;
  }
  while (!extension.empty()) {
    const std::size_t w = extension.back();
    extension.pop_back();
    std::vector<std::size_t> next = extension;
    std::vector<std::size_t> newly;
    for (std::size_t u : adj[w]) {
      if (u <= root || blocked[u]) continue;
      blocked[u] = 1;
      newly.push_back(u);
      next.push_back(u);
    }
    current.push_back(w);
    const bool go_on = grow_connected(adj, root, current, blocked, std::move(next), visit);
    current.pop_back();
    for (std::size_t u : newly) blocked[u] = 0;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

template <class Visit>
void for_each_connected_subset(const WeightedGraph& g, Visit&& visit) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [e, m] : g.edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (std::size_t root = 0; root < n; ++root) {
    // blocked marks vertices already in the current set or its extension,
    // and those excluded at an earlier branch.
    std::vector<char> blocked(n, 0);
    blocked[root] = 1;
    std::vector<std::size_t> extension;
    for (std::size_t u : adj[root]) {
      if (u > root) {
        blocked[u] = 1;
        extension.push_back(u);
      }
    }
    std::vector<std::size_t> current{root};
    if (!detail::grow_connected(adj, root, current, blocked, extension, visit)) return;
  }
}

}  // namespace diagramkit
