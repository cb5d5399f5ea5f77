#include "graphspec/bipartite.hpp"

#include <array>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace graphspec {

std::optional<Bipartition> bipartition(const WeightedGraph& g, const VertexSet& support) {
  std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<int> cls0, cls1;
  for (int start : support) {
    if (color[static_cast<size_t>(start)] >= 0) continue;
    color[static_cast<size_t>(start)] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const auto& nb : g.neighbors(x)) {
        if (!support.contains(nb.vertex)) continue;
        if (nb.vertex == x) return std::nullopt;  // self-loop
        int& c = color[static_cast<size_t>(nb.vertex)];
        if (c < 0) {
          c = 1 - color[static_cast<size_t>(x)];
          q.push(nb.vertex);
        } else if (c == color[static_cast<size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v : support)
    (color[static_cast<size_t>(v)] == 0 ? cls0 : cls1).push_back(v);
  return Bipartition{VertexSet(std::move(cls0)), VertexSet(std::move(cls1))};
}

namespace {

// Shortest odd closed walk through `start` in the induced subgraph, via BFS on
// the (vertex, parity) product. Returns length and the walk; the globally
// shortest odd closed walk is always a circuit.
struct ParityWalk {
  int length = std::numeric_limits<int>::max();
  std::vector<int> walk;
};

ParityWalk shortest_odd_closed_walk(const WeightedGraph& g, const VertexSet& support,
                                    int start) {
  const int n = g.vertex_count();
  // dist[v][p]: shortest walk from start to v of parity p.
  std::vector<std::array<int, 2>> dist(static_cast<size_t>(n), {-1, -1});
  std::vector<std::array<std::pair<int, int>, 2>> parent(
      static_cast<size_t>(n), {std::pair<int, int>{-1, -1}, std::pair<int, int>{-1, -1}});
  std::queue<std::pair<int, int>> q;
  dist[static_cast<size_t>(start)][0] = 0;
  q.push({start, 0});
  while (!q.empty()) {
    auto [x, p] = q.front();
    q.pop();
    for (const auto& nb : g.neighbors(x)) {
      if (!support.contains(nb.vertex)) continue;
      if (nb.vertex == x) continue;  // loops handled separately
      int np = 1 - p;
      if (dist[static_cast<size_t>(nb.vertex)][np] < 0) {
        dist[static_cast<size_t>(nb.vertex)][np] = dist[static_cast<size_t>(x)][p] + 1;
        parent[static_cast<size_t>(nb.vertex)][np] = {x, p};
        q.push({nb.vertex, np});
      }
    }
  }
  ParityWalk out;
  if (dist[static_cast<size_t>(start)][1] < 0) return out;
  out.length = dist[static_cast<size_t>(start)][1];
  int v = start, p = 1;
  while (!(v == start && p == 0)) {
    out.walk.push_back(v);
    auto [pv, pp] = parent[static_cast<size_t>(v)][p];
    v = pv;
    p = pp;
  }
  out.walk.push_back(start);
  return out;
}

}  // namespace

OddGirth odd_girth(const WeightedGraph& g, const VertexSet& support) {
  for (int v : support)
    if (g.loop_weight(v) > 0.0) return OddGirth{1, {v}};

  OddGirth best;
  int best_len = std::numeric_limits<int>::max();
  for (int start : support) {
    ParityWalk w = shortest_odd_closed_walk(g, support, start);
    if (w.length < best_len) {
      best_len = w.length;
      best.length = w.length;
      // Drop the duplicated closing vertex; keep circuit vertex list.
      w.walk.pop_back();
      best.witness = std::move(w.walk);
    }
  }
  return best;
}

}  // namespace graphspec
