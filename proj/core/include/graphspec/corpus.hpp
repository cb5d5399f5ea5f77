#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graphspec/weighted_graph.hpp"

namespace graphspec {

WeightedGraph path_graph(int n);
WeightedGraph cycle_graph(int n);
WeightedGraph complete_graph(int n);
WeightedGraph complete_bipartite_graph(int m, int n);
WeightedGraph hypercube_graph(int dim);
WeightedGraph petersen_graph();
/// Even cycle plus chord edges; throws if a chord duplicates a cycle edge.
WeightedGraph chorded_cycle(int n, const std::vector<std::pair<int, int>>& chords);

/// Deterministic pseudo-random source for seeded corpora. All draws reduce
/// the raw engine output directly so a seed pins the whole corpus.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(int num, int den) { return below(den) < num; }

private:
  std::mt19937_64 eng_;
};

struct RandomGraphSpec {
  int min_vertices = 4;
  int max_vertices = 10;
  bool allow_loops = false;
  bool force_bipartite = false;
  bool force_odd_cycle = false;
  int max_weight = 3;  // weights drawn from {1..max_weight}
  int extra_edge_factor = 1;  // roughly n * factor extra edges attempted
};

/// Connected random graph: a random spanning tree plus extra edges, integer
/// weights stored as doubles. With force_bipartite the two classes are fixed
/// up front; with force_odd_cycle an odd circuit is guaranteed.
WeightedGraph random_connected_graph(Rng& rng, const RandomGraphSpec& spec);

/// Random connected induced subset of the given size (BFS-grown).
VertexSet random_connected_subset(Rng& rng, const WeightedGraph& g, int size);

}  // namespace graphspec
