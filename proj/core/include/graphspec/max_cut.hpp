#pragma once

#include <cstdint>

#include "graphspec/isoperimetry.hpp"
#include "graphspec/weighted_graph.hpp"

namespace graphspec {

struct MaxCutResult {
  double value = 0.0;
  PartitionPair partition;
  std::uint64_t candidates = 0;
};

/// Exact maximum cut over all two-sided vertex partitions, by enumeration
/// with vertex 0 pinned to the first side. Loops never cross a cut.
MaxCutResult max_cut_exact(const WeightedGraph& g, const EnumerationCaps& caps = {});

struct MaxCutBound {
  double delta = 0.0;
  double bound = 0.0;  // m * (1 - delta)
};

/// Upper bound m(1 - delta) on the maximum cut of a non-bipartite unweighted
/// graph in which every vertex lies on a shortest odd circuit (degree bound d,
/// odd girth 2s+1, edge count m). For girth 3, delta = 2 / (3 d (d-1)); for
/// girth 2s+1 >= 5, delta = 1 / (d (2s+1) C(d^s, 2s+1)). Throws when the
/// binomial degenerates to zero (small d), in which case use the exact-ball
/// variant below.
MaxCutBound max_cut_bound(int degree_bound, int odd_girth_value, double edge_count);

/// Same bound with d^s replaced by the true maximal ball vertex count,
/// supplied by the caller from BFS.
MaxCutBound max_cut_bound_exact_ball(int degree_bound, int odd_girth_value,
                                     double edge_count, long long ball_vertex_count);

}  // namespace graphspec
