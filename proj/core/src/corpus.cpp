#include "graphspec/corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "graphspec/bipartite.hpp"

namespace graphspec {

WeightedGraph path_graph(int n) {
  std::vector<WeightedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return WeightedGraph(n, edges);
}

WeightedGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return WeightedGraph(n, edges);
}

WeightedGraph complete_graph(int n) {
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return WeightedGraph(n, edges);
}

WeightedGraph complete_bipartite_graph(int m, int n) {
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.push_back({i, m + j, 1.0});
  return WeightedGraph(m + n, edges);
}

WeightedGraph hypercube_graph(int dim) {
  if (dim < 1 || dim > 20) throw std::invalid_argument("hypercube dimension out of range");
  const int n = 1 << dim;
  std::vector<WeightedEdge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if ((v ^ (1 << b)) > v) edges.push_back({v, v ^ (1 << b), 1.0});
  return WeightedGraph(n, edges);
}

WeightedGraph petersen_graph() {
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1.0});      // outer pentagon
    edges.push_back({5 + i, 5 + (i + 2) % 5, 1.0});  // inner pentagram
    edges.push_back({i, 5 + i, 1.0});            // spokes
  }
  return WeightedGraph(10, edges);
}

WeightedGraph chorded_cycle(int n, const std::vector<std::pair<int, int>>& chords) {
  if (n < 4) throw std::invalid_argument("chorded cycle needs at least 4 vertices");
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  for (auto [u, v] : chords) {
    if ((u + 1) % n == v || (v + 1) % n == u)
      throw std::invalid_argument("chord duplicates a cycle edge");
    edges.push_back({u, v, 1.0});
  }
  return WeightedGraph(n, edges);
}

WeightedGraph random_connected_graph(Rng& rng, const RandomGraphSpec& spec) {
  const int n = spec.min_vertices + rng.below(spec.max_vertices - spec.min_vertices + 1);
  std::vector<int> cls(static_cast<size_t>(n), 0);
  if (spec.force_bipartite) {
    // both classes nonempty
    for (int v = 0; v < n; ++v) cls[static_cast<size_t>(v)] = rng.below(2);
    cls[0] = 0;
    cls[static_cast<size_t>(n - 1)] = 1;
  }
  auto weight = [&rng, &spec]() { return static_cast<double>(1 + rng.below(spec.max_weight)); };

  std::set<std::pair<int, int>> used;
  std::vector<WeightedEdge> edges;
  auto add = [&](int u, int v, double w) {
    auto key = std::minmax(u, v);
    if (used.count({key.first, key.second})) return false;
    used.insert({key.first, key.second});
    edges.push_back({u, v, w});
    return true;
  };

  // spanning tree
  for (int v = 1; v < n; ++v) {
    int parent;
    if (spec.force_bipartite) {
      std::vector<int> opposite;
      for (int u = 0; u < v; ++u)
        if (cls[static_cast<size_t>(u)] != cls[static_cast<size_t>(v)]) opposite.push_back(u);
      if (opposite.empty()) {
        cls[static_cast<size_t>(v)] = 1 - cls[static_cast<size_t>(v)];
        for (int u = 0; u < v; ++u)
          if (cls[static_cast<size_t>(u)] != cls[static_cast<size_t>(v)]) opposite.push_back(u);
      }
      parent = opposite[static_cast<size_t>(rng.below(static_cast<int>(opposite.size())))];
    } else {
      parent = rng.below(v);
    }
    add(parent, v, weight());
  }

  int attempts = n * spec.extra_edge_factor;
  for (int t = 0; t < attempts; ++t) {
    int u = rng.below(n);
    int v = rng.below(n);
    if (u == v) continue;
    if (spec.force_bipartite && cls[static_cast<size_t>(u)] == cls[static_cast<size_t>(v)])
      continue;
    add(u, v, weight());
  }

  if (spec.allow_loops) {
    for (int v = 0; v < n; ++v)
      if (rng.chance(1, 4)) add(v, v, weight());
  }

  if (spec.force_odd_cycle) {
    WeightedGraph probe(n, edges);
    auto bip = bipartition(probe, probe.all_vertices());
    if (bip.has_value()) {
      // join two same-class vertices; one class has >= 2 members for n >= 3
      const VertexSet& big = (bip->first.size() >= 2) ? bip->first : bip->second;
      add(big[0], big[1], weight());
    }
  }
  return WeightedGraph(n, edges);
}

VertexSet random_connected_subset(Rng& rng, const WeightedGraph& g, int size) {
  if (size < 1 || size > g.vertex_count())
    throw std::invalid_argument("subset size out of range");
  int start = rng.below(g.vertex_count());
  std::vector<int> members{start};
  std::set<int> in{start};
  while (static_cast<int>(members.size()) < size) {
    // random frontier expansion keeps the induced set connected
    std::vector<int> frontier;
    for (int v : members)
      for (const auto& nb : g.neighbors(v))
        if (nb.vertex != v && !in.count(nb.vertex)) frontier.push_back(nb.vertex);
    if (frontier.empty()) break;
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    int pick = frontier[static_cast<size_t>(rng.below(static_cast<int>(frontier.size())))];
    members.push_back(pick);
    in.insert(pick);
  }
  return VertexSet(std::move(members));
}

}  // namespace graphspec
