#include "graphspec/finite_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "graphspec/metric.hpp"

namespace graphspec {

FiniteGraphBounds finite_graph_bounds(const WeightedGraph& g, int m) {
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  const int n = g.vertex_count();
  FiniteGraphBounds out;
  out.m = m;

  // Diameter and a realizing pair, smallest ids on ties.
  int best_u = 0, best_v = 0, diam = 0;
  std::vector<std::vector<int>> dist(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    dist[static_cast<size_t>(v)] = g.distances_from(v);
    for (int w = 0; w < n; ++w) {
      int d = dist[static_cast<size_t>(v)][static_cast<size_t>(w)];
      if (d > diam) {
        diam = d;
        best_u = v;
        best_v = w;
      }
    }
  }
  out.diameter = diam;
  if (diam < 2) throw std::invalid_argument("diameter must be at least 2");
  if (m < 1 || 2 * m > diam) throw std::invalid_argument("m must satisfy 1 <= m <= D/2");

  // l = sup over reference points of mu/mu_- ; kappa likewise.
  double l = 0.0, kap = 0.0;
  for (int x0 = 0; x0 < n; ++x0) {
    auto splits = radial_splits(g, x0);
    for (int x = 0; x < n; ++x) {
      if (x != x0) l = std::max(l, g.measure(x) / splits[static_cast<size_t>(x)].inward);
      kap = std::max(kap, splits[static_cast<size_t>(x)].lateral / g.measure(x));
    }
  }
  out.l = l;
  out.kappa_g = kap;
  if (!(l > 2.0) || !std::isfinite(l))
    throw std::invalid_argument("hypothesis 2 < l < infinity fails");

  const int r = diam / (2 * m);
  out.ball_radius = r;

  // Centers spaced 2r apart along a shortest path between the diameter pair.
  std::vector<int> parent(static_cast<size_t>(n), -1);
  {
    std::vector<int> order{best_u};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(best_u)] = 1;
    for (size_t head = 0; head < order.size(); ++head) {
      int x = order[head];
      for (const auto& nb : g.neighbors(x)) {
        if (nb.vertex == x || seen[static_cast<size_t>(nb.vertex)]) continue;
        seen[static_cast<size_t>(nb.vertex)] = 1;
        parent[static_cast<size_t>(nb.vertex)] = x;
        order.push_back(nb.vertex);
      }
    }
  }
  std::vector<int> path;
  for (int v = best_v; v >= 0; v = parent[static_cast<size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());  // best_u ... best_v

  for (int i = 0; i < m; ++i) {
    int center = path[static_cast<size_t>(2 * r * i)];
    out.centers.push_back(center);
    out.balls.push_back(ball(g, center, r - 1));
  }
  out.balls_edge_disjoint = true;
  for (size_t i = 0; i < out.balls.size() && out.balls_edge_disjoint; ++i)
    for (size_t j = i + 1; j < out.balls.size(); ++j)
      if (cut_measure(g, out.balls[i], out.balls[j]) > 0.0 ||
          !out.balls[i].disjoint_from(out.balls[j])) {
        out.balls_edge_disjoint = false;
        break;
      }

  const double amp = 2.0 * std::sqrt(l - 1.0) / l;
  const double c = std::cos(std::numbers::pi / r);
  out.theta_top_lower = 1.0 + amp * c - 2.0 * kap;
  out.theta_low_upper = 1.0 - amp * c;
  return out;
}

}  // namespace graphspec
