#pragma once

#include <span>
#include <string>
#include <vector>

namespace graphspec {

struct Neighbor {
  int vertex;
  double weight;
};

struct WeightedEdge {
  int u;
  int v;
  double weight;
};

/// Sorted set of vertex ids with deterministic ascending iteration.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> ids);

  /// Half-open range [first, last).
  static VertexSet range(int first, int last);

  bool contains(int v) const;
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  int operator[](int i) const { return ids_[static_cast<size_t>(i)]; }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  VertexSet unioned(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  bool disjoint_from(const VertexSet& other) const;

  bool operator==(const VertexSet&) const = default;

private:
  std::vector<int> ids_;
};

/// Lexicographic order on the sorted id sequences; used for witness tie-breaking.
bool lex_less(const VertexSet& a, const VertexSet& b);

/// Finite weighted graph with symmetric positive edge weights. Self-loops
/// (u == v) are allowed and carry weight mu_xx; the vertex measure
/// mu(x) = sum_y mu_xy counts a loop once. Immutable after construction.
class WeightedGraph {
public:
  WeightedGraph(int vertex_count, const std::vector<WeightedEdge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::span<const Neighbor> neighbors(int v) const;
  double measure(int v) const { return measure_[static_cast<size_t>(v)]; }
  double loop_weight(int v) const { return loop_[static_cast<size_t>(v)]; }
  double edge_weight(int u, int v) const;
  /// Unweighted neighbor count, loops excluded.
  int degree(int v) const;
  int max_degree() const;

  double total_measure() const { return total_measure_; }
  /// Sum of edge weights, each edge once, loops once.
  double total_edge_weight() const { return total_edge_weight_; }
  int edge_count() const { return edge_count_; }
  bool has_loops() const { return has_loops_; }
  bool has_loop_in(const VertexSet& s) const;

  bool is_connected() const;
  bool is_connected_on(const VertexSet& s) const;

  /// BFS distances, -1 where unreachable.
  std::vector<int> distances_from(int v) const;
  int diameter() const;
  VertexSet all_vertices() const;

private:
  std::vector<std::vector<Neighbor>> adj_;
  std::vector<double> measure_;
  std::vector<double> loop_;
  double total_measure_ = 0.0;
  double total_edge_weight_ = 0.0;
  int edge_count_ = 0;
  bool has_loops_ = false;
};

/// vol(S) = sum of ambient vertex measures over S.
double volume(const WeightedGraph& g, const VertexSet& s);

/// |E(A,B)| = sum over ordered pairs (x,y) in A x B of mu_xy. For A == B this
/// counts internal non-loop edges twice and loops once.
double cut_measure(const WeightedGraph& g, const VertexSet& a, const VertexSet& b);

/// |dS| = |E(S, complement of S)|.
double boundary_measure(const WeightedGraph& g, const VertexSet& s);

/// Ordered disjoint nonempty pair with cached cut statistics. Construct via
/// compute() so the cache always matches the host graph.
struct PartitionPair {
  VertexSet v1;
  VertexSet v2;
  double cross = 0.0;      // |E(V1,V2)|
  double internal1 = 0.0;  // |E(V1,V1)|
  double internal2 = 0.0;  // |E(V2,V2)|
  double vol1 = 0.0;
  double vol2 = 0.0;
  double boundary = 0.0;   // |d(V1 u V2)|

  static PartitionPair compute(const WeightedGraph& g, VertexSet v1, VertexSet v2);
  double dual_ratio() const { return 2.0 * cross / (vol1 + vol2); }
};

}  // namespace graphspec
