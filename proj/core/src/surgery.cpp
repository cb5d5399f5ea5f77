#include "graphspec/surgery.hpp"

#include <stdexcept>
#include <vector>

namespace graphspec {

SurgeryResult surgery_partition(const WeightedGraph& g, const VertexSet& u) {
  if (u.size() < 2) throw std::invalid_argument("surgery needs at least two vertices");
  if (g.has_loop_in(u)) throw std::invalid_argument("surgery requires a loopless set");

  const auto& ids = u.ids();
  const int m = static_cast<int>(ids.size());
  std::vector<int> pos_of(static_cast<size_t>(g.vertex_count()), -1);
  for (int i = 0; i < m; ++i) pos_of[static_cast<size_t>(ids[static_cast<size_t>(i)])] = i;

  // side[i] in {1,2}; start from the singleton split at the smallest id.
  std::vector<int> side(static_cast<size_t>(m), 2);
  side[0] = 1;

  // w_to[side][i]: weight from vertex i into that side.
  std::vector<double> to1(static_cast<size_t>(m), 0.0), to2(static_cast<size_t>(m), 0.0);
  double cross = 0.0, int1 = 0.0, int2 = 0.0;
  for (int i = 0; i < m; ++i) {
    for (const auto& nb : g.neighbors(ids[static_cast<size_t>(i)])) {
      int j = pos_of[static_cast<size_t>(nb.vertex)];
      if (j < 0) continue;
      if (side[static_cast<size_t>(j)] == 1) to1[static_cast<size_t>(i)] += nb.weight;
      else to2[static_cast<size_t>(i)] += nb.weight;
    }
    if (side[static_cast<size_t>(i)] == 1) {
      cross += to2[static_cast<size_t>(i)];
      int1 += to1[static_cast<size_t>(i)];
    } else {
      int2 += to2[static_cast<size_t>(i)];
    }
  }
  // cross counted from one side only above; internal sums are already the
  // doubled |E(.,.)| convention.

  const double tol = 1e-12 * (1.0 + g.total_edge_weight());
  int moves = 0;
  const int move_guard = 1000000;
  while (int1 > cross + tol || int2 > cross + tol) {
    if (++moves > move_guard) throw std::runtime_error("surgery did not terminate");
    int from;
    if (int1 > cross + tol && int2 > cross + tol) from = (int1 >= int2) ? 1 : 2;
    else from = (int1 > cross + tol) ? 1 : 2;
    // best positive gain, ties to smallest id
    int pick = -1;
    double pick_gain = 0.0;
    for (int i = 0; i < m; ++i) {
      if (side[static_cast<size_t>(i)] != from) continue;
      double gain = (from == 1) ? to1[static_cast<size_t>(i)] - to2[static_cast<size_t>(i)]
                                : to2[static_cast<size_t>(i)] - to1[static_cast<size_t>(i)];
      if (gain > 0.0 && (pick < 0 || gain > pick_gain)) {
        pick = i;
        pick_gain = gain;
      }
    }
    if (pick < 0) throw std::runtime_error("surgery found no admissible move");
    int to = 3 - from;
    side[static_cast<size_t>(pick)] = to;
    for (const auto& nb : g.neighbors(ids[static_cast<size_t>(pick)])) {
      int j = pos_of[static_cast<size_t>(nb.vertex)];
      if (j < 0) continue;
      if (from == 1) {
        to1[static_cast<size_t>(j)] -= nb.weight;
        to2[static_cast<size_t>(j)] += nb.weight;
      } else {
        to2[static_cast<size_t>(j)] -= nb.weight;
        to1[static_cast<size_t>(j)] += nb.weight;
      }
    }
    // recompute the three aggregates from the per-vertex caches
    cross = int1 = int2 = 0.0;
    for (int i = 0; i < m; ++i) {
      if (side[static_cast<size_t>(i)] == 1) {
        cross += to2[static_cast<size_t>(i)];
        int1 += to1[static_cast<size_t>(i)];
      } else {
        int2 += to2[static_cast<size_t>(i)];
      }
    }
  }

  std::vector<int> a, b;
  for (int i = 0; i < m; ++i)
    (side[static_cast<size_t>(i)] == 1 ? a : b).push_back(ids[static_cast<size_t>(i)]);
  SurgeryResult out;
  out.partition = PartitionPair::compute(g, VertexSet(std::move(a)), VertexSet(std::move(b)));
  out.moves = moves;
  return out;
}

}  // namespace graphspec
