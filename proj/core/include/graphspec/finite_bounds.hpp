#pragma once

#include <vector>

#include "graphspec/weighted_graph.hpp"

namespace graphspec {

/// Two-sided bounds on the ordinary normalized Laplacian spectrum of a finite
/// connected graph from edge-disjoint metric balls along a diameter geodesic:
/// theta_{N-m} is bounded below and theta_m above through the half-line model
/// at l = sup over reference points of mu(x)/mu_-(x) (each reference point
/// excluded from its own sup). Requires 2 < l < infinity, diameter >= 2 and
/// 1 <= m <= floor(D/2).
struct FiniteGraphBounds {
  int m = 1;
  int diameter = 0;
  double l = 0.0;
  double kappa_g = 0.0;
  int ball_radius = 0;       // r = floor(D / 2m); balls have radius r - 1
  std::vector<int> centers;  // m centers spaced 2r apart on a diameter geodesic
  std::vector<VertexSet> balls;
  bool balls_edge_disjoint = false;
  double theta_top_lower = 0.0;  // lower bound on theta_{N-m}
  double theta_low_upper = 0.0;  // upper bound on theta_m
};

FiniteGraphBounds finite_graph_bounds(const WeightedGraph& g, int m);

}  // namespace graphspec
