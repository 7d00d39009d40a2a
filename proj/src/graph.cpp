#include "diagramkit/graph.hpp"

#include <algorithm>
#include <deque>

#include "diagramkit/errors.hpp"

namespace diagramkit {

namespace {

WeightedGraph::EdgeKey key(std::size_t u, std::size_t v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); }

}  // namespace

std::size_t WeightedGraph::add_vertex(std::string id, int weight, int genus) {
  if (id.empty()) throw GraphError("empty vertex id");
  if (index_.count(id)) throw GraphError("duplicate vertex id '" + id + "'");
  if (weight < 1) throw GraphError("vertex '" + id + "' has weight " + std::to_string(weight) + " < 1");
  if (genus < 0) throw GraphError("vertex '" + id + "' has negative genus");
  const std::size_t pos = vertices_.size();
  index_.emplace(id, pos);
  vertices_.push_back({std::move(id), weight, genus});
  return pos;
}

void WeightedGraph::check_index(std::size_t v) const {
  if (v >= vertices_.size()) throw GraphError("vertex position out of range");
}

void WeightedGraph::set_edge(std::size_t u, std::size_t v, int multiplicity) {
  check_index(u);
  check_index(v);
  if (u == v) throw GraphError("self-edge at '" + vertices_[u].id + "'");
  if (multiplicity < 0) throw GraphError("negative edge multiplicity");
  if (multiplicity == 0) {
    edges_.erase(key(u, v));
  } else {
    edges_[key(u, v)] = multiplicity;
  }
}

void WeightedGraph::set_edge(const std::string& u, const std::string& v, int multiplicity) {
  set_edge(index_of(u), index_of(v), multiplicity);
}

std::optional<std::size_t> WeightedGraph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw GraphError("unknown vertex id '" + id + "'");
  return it->second;
}

int WeightedGraph::multiplicity(std::size_t u, std::size_t v) const {
  if (u == v) return 0;
  auto it = edges_.find(key(u, v));
  return it == edges_.end() ? 0 : it->second;
}

std::vector<std::size_t> WeightedGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [e, m] : edges_) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightedGraph WeightedGraph::induced(std::span<const std::size_t> subset) const {
  std::vector<std::size_t> order(subset.begin(), subset.end());
  std::sort(order.begin(), order.end());
  return permuted(order);
}

WeightedGraph WeightedGraph::without(std::size_t v) const {
  check_index(v);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i != v) keep.push_back(i);
  }
  return permuted(keep);
}

WeightedGraph WeightedGraph::permuted(std::span<const std::size_t> order) const {
  WeightedGraph out;
  std::vector<std::size_t> position(size(), size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    check_index(order[i]);
    const auto& vx = vertices_[order[i]];
    out.add_vertex(vx.id, vx.weight, vx.genus);
    position[order[i]] = i;
  }
  for (const auto& [e, m] : edges_) {
    const std::size_t a = position[e.first];
    const std::size_t b = position[e.second];
    if (a < order.size() && b < order.size()) out.edges_[key(a, b)] = m;
  }
  return out;
}

void WeightedGraph::set_weight(std::size_t v, int weight) {
  check_index(v);
  if (weight < 1) {
    throw GraphError("vertex '" + vertices_[v].id + "' would get weight " + std::to_string(weight));
  }
  vertices_[v].weight = weight;
}

long WeightedGraph::excess() const {
  long s = 0;
  for (const auto& v : vertices_) s += v.weight - 2;
  return s;
}

std::string WeightedGraph::fresh_id(const std::string& prefix) const {
  for (std::size_t k = size() + 1;; ++k) {
    std::string id = prefix + std::to_string(k);
    if (!index_.count(id)) return id;
  }
}

SymMatrix intersection_matrix(const WeightedGraph& g) {
  SymMatrixBuilder b(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) b.set(i, i, Rational(-g.vertex(i).weight));
  for (const auto& [e, m] : g.edges()) b.set(e.first, e.second, Rational(m));
  return std::move(b).build();
}

std::vector<Rational> canonical_class(const WeightedGraph& g) {
  std::vector<Rational> k;
  k.reserve(g.size());
  for (const auto& v : g.vertices()) k.emplace_back(v.weight - 2 + 2 * v.genus);
  return k;
}

WeightedGraph blowup_vertex(const WeightedGraph& g, const std::string& v, const std::string& new_id) {
  const std::size_t pv = g.index_of(v);
  if (g.contains(new_id)) throw GraphError("new vertex id '" + new_id + "' already exists");
  WeightedGraph out = g;
  out.set_weight(pv, g.vertex(pv).weight + 1);
  const std::size_t pe = out.add_vertex(new_id, 1, 0);
  out.set_edge(pv, pe, 1);
  return out;
}

WeightedGraph blowup_edge(const WeightedGraph& g, const std::string& u, const std::string& v,
                          const std::string& new_id) {
  const std::size_t pu = g.index_of(u);
  const std::size_t pv = g.index_of(v);
  const int m = g.multiplicity(pu, pv);
  if (m == 0) throw GraphError("no edge between '" + u + "' and '" + v + "'");
  if (m != 1) {
    throw GraphError("edge '" + u + "'-'" + v + "' has multiplicity " + std::to_string(m) +
                     "; only simple edges can be blown up");
  }
  if (g.contains(new_id)) throw GraphError("new vertex id '" + new_id + "' already exists");
  WeightedGraph out = g;
  out.set_edge(pu, pv, 0);
  out.set_weight(pu, g.vertex(pu).weight + 1);
  out.set_weight(pv, g.vertex(pv).weight + 1);
  const std::size_t pe = out.add_vertex(new_id, 1, 0);
  out.set_edge(pu, pe, 1);
  out.set_edge(pv, pe, 1);
  return out;
}

std::optional<std::string> contractibility_problem(const WeightedGraph& g, std::size_t e) {
  const auto& v = g.vertex(e);
  if (v.weight != 1) return "weight is " + std::to_string(v.weight) + ", not 1";
  if (v.genus != 0) return "genus is " + std::to_string(v.genus) + ", not 0";
  const auto nb = g.neighbors(e);
  if (nb.size() > 2) return "has " + std::to_string(nb.size()) + " neighbors";
  for (std::size_t u : nb) {
    if (g.multiplicity(e, u) != 1) return "edge to '" + g.vertex(u).id + "' is not simple";
    if (g.vertex(u).weight < 2) return "neighbor '" + g.vertex(u).id + "' has weight 1";
  }
  if (nb.size() == 2 && g.multiplicity(nb[0], nb[1]) != 0) return "its two neighbors are already adjacent";
  return std::nullopt;
}

bool is_contractible(const WeightedGraph& g, std::size_t e) { return !contractibility_problem(g, e); }

WeightedGraph blowdown(const WeightedGraph& g, const std::string& e) {
  const std::size_t pe = g.index_of(e);
  if (auto problem = contractibility_problem(g, pe)) {
    throw GraphError("cannot blow down '" + e + "': " + *problem);
  }
  const auto nb = g.neighbors(pe);
  WeightedGraph out = g;
  for (std::size_t u : nb) out.set_weight(u, g.vertex(u).weight - 1);
  if (nb.size() == 2) out.set_edge(nb[0], nb[1], 1);
  return out.without(pe);
}

bool is_minimal(const WeightedGraph& g) {
  return std::none_of(g.vertices().begin(), g.vertices().end(),
                      [](const Vertex& v) { return v.weight == 1 && v.genus == 0; });
}

Reduction reduce_to_minimal(const WeightedGraph& g, std::mt19937_64* rng) {
  Reduction r{g, {}};
  for (;;) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < r.graph.size(); ++i) {
      if (is_contractible(r.graph, i)) candidates.push_back(i);
    }
    if (candidates.empty()) return r;
    std::size_t pick = candidates.front();
    if (rng != nullptr) {
      std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
      pick = candidates[dist(*rng)];
    }
    BlowdownStep step{r.graph.vertex(pick).id, {}};
    for (std::size_t u : r.graph.neighbors(pick)) step.neighbors.push_back(r.graph.vertex(u).id);
    r.graph = blowdown(r.graph, step.removed);
    r.steps.push_back(std::move(step));
  }
}

std::vector<std::vector<int>> distance_matrix(const WeightedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [e, m] : g.edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[u]) {
        if (dist[s][w] >= 0) continue;
        dist[s][w] = dist[s][u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t distance_pairs(const WeightedGraph& g, int rho_min, int rho_max) {
  if (rho_min < 1) throw std::invalid_argument("rho_min must be >= 1");
  const auto dist = distance_matrix(g);
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (dist[i][j] >= rho_min && dist[i][j] <= rho_max) ++count;
    }
  }
  return count;
}

std::optional<int> diameter(const WeightedGraph& g) {
  const auto dist = distance_matrix(g);
  int best = 0;
  for (const auto& row : dist) {
    for (int d : row) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const WeightedGraph& g) { return g.empty() || diameter(g).has_value(); }

bool is_tree(const WeightedGraph& g) {
  return !g.empty() && is_connected(g) && g.edges().size() + 1 == g.size();
}

}  // namespace diagramkit
