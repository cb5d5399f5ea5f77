#pragma once

#include <vector>

#include "graphspec/weighted_graph.hpp"

namespace graphspec {

/// Closed metric ball {x : d(x0,x) <= radius}.
VertexSet ball(const WeightedGraph& g, int x0, int radius);

/// Per-radius sphere statistics around a center. p[r] = |E(S_r, S_{r+1})|,
/// q[r] = |E(S_r, S_r)| (internal edges doubled, loops once), with cumulative
/// sums P, Q and ball volumes. Satisfies vol(B_r) = P_{r-1} + P_r + Q_r.
struct SphereProfile {
  int center = 0;
  int r_max = 0;
  std::vector<int> sphere_size;
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> cumulative_p;
  std::vector<double> cumulative_q;
  std::vector<double> ball_volume;
};

SphereProfile sphere_profile(const WeightedGraph& g, int x0, int r_max);

/// Split of mu(x) over neighbors strictly farther from / strictly closer to /
/// equidistant from the reference vertex. Self-loops count as lateral.
struct RadialSplit {
  double outward = 0.0;  // mu_+
  double inward = 0.0;   // mu_-
  double lateral = 0.0;  // mu_0
  double total() const { return outward + inward + lateral; }
};

RadialSplit radial_split(const WeightedGraph& g, int x0, int x);

/// Same split for every vertex at once (one BFS).
std::vector<RadialSplit> radial_splits(const WeightedGraph& g, int x0);

}  // namespace graphspec
