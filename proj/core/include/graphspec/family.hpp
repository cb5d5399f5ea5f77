#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphspec/weighted_graph.hpp"

namespace graphspec {

struct TailConstants {
  double m_minus_inf = 0.0;  // limit of sup mu_-/mu outside growing balls
  double kappa_inf = 0.0;    // limit of sup mu_0/mu outside growing balls
};

struct FamilyMetadata {
  bool bipartite = false;
  bool has_loops = false;
  std::optional<TailConstants> declared_tail;
  /// Known upper bound on the limiting dual Cheeger constant, when available.
  std::optional<double> hbar_upper;
  /// Probe threshold schedule for the spectral-concentration verdict;
  /// absent means the verdict is not evaluated for this family.
  std::function<double(int)> concentration_threshold;
};

/// A procedural infinite graph materialized out to a finite horizon. Vertices
/// within distance `safe_radius` of the base vertex have every neighbor
/// present, so their ambient measures and boundary edges are exact; the
/// frontier ring exists only to carry those edges. Immutable once built.
class GraphFamily {
public:
  GraphFamily(std::string name, std::string params, WeightedGraph graph, int base_vertex,
              int safe_radius, std::function<VertexSet(int)> exhaustion, int max_exhaustion,
              std::vector<std::string> labels, FamilyMetadata metadata);

  const std::string& name() const { return name_; }
  const std::string& params() const { return params_; }
  const WeightedGraph& graph() const { return *graph_; }
  int base_vertex() const { return base_; }
  int safe_radius() const { return safe_radius_; }

  /// True when every member lies within the safe radius of the base vertex.
  bool is_safe(const VertexSet& s) const;
  void require_safe(const VertexSet& s) const;

  /// Canonical nested exhaustion sets; throws beyond max_exhaustion().
  VertexSet exhaustion(int n) const;
  int max_exhaustion() const { return max_exhaustion_; }

  /// Metric ball that must stay inside the explored region.
  VertexSet metric_ball(int x0, int radius) const;

  const FamilyMetadata& metadata() const { return metadata_; }
  const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
  int id_of(const std::string& label) const;

  /// Family-specific distinguished sets (e.g. the bipartite-block instance).
  const std::map<std::string, VertexSet>& named_sets() const { return named_sets_; }
  void add_named_set(const std::string& key, VertexSet s);

private:
  std::string name_;
  std::string params_;
  std::shared_ptr<const WeightedGraph> graph_;
  int base_ = 0;
  int safe_radius_ = 0;
  std::function<VertexSet(int)> exhaustion_;
  int max_exhaustion_ = 0;
  std::vector<std::string> labels_;
  std::map<std::string, int> label_index_;
  FamilyMetadata metadata_;
  std::map<std::string, VertexSet> named_sets_;
  std::vector<int> depth_;  // distance from base
};

/// Two-sided unit-weight path; exhaustion n is the coordinate block [0, n).
GraphFamily make_infinite_path(int horizon);

/// Two parallel unit paths with rung and both diagonal cross edges
/// ((i, s) ~ (j, 1-s) whenever |i - j| <= 1); exhaustion n takes the block
/// [0, n) on both rails. Construction is accepted only if its Dirichlet
/// eigenvalues reproduce (4/5)(1 -+ cos(pi/(n+1))) for n = 2..10.
GraphFamily make_ladder(int horizon);

/// Product of the integer line with a 3-cycle: (i, a) ~ (i +- 1, a) and
/// (i, a) ~ (i, a +- 1). Exhaustion n takes [0, n) x {0,1,2}. Accepted only if
/// the Dirichlet eigenvalues reproduce (1 - cos(pi/(n+1)))/2 and
/// 5/4 + cos(pi/(n+1))/2 for n = 2..10.
GraphFamily make_cayley_line_triangle(int horizon);

/// Homogeneous tree of the given degree; exhaustion n is the ball of radius n.
GraphFamily make_homogeneous_tree(int degree, int horizon);

/// Geometric-weight half-line; exhaustion r is the ball {0..r}.
GraphFamily make_halfline_family(double l, int horizon);

/// Planar unit lattice with one extra diagonal edge near the origin, joined by
/// a single edge to a complete bipartite block K_{m,n}. Distinguished set
/// "example_omega" is the 5-vertex patch around the origin plus the block.
GraphFamily make_lattice_with_bipartite_block(int m, int n, int horizon);

/// One-sided unit chain with a self-loop of weight 2^k at vertex k, so the
/// diagonal of the normalized Laplacian at k equals 2/(2^k + 2).
GraphFamily make_selfloop_chain(int horizon);

/// Tree whose depth-r vertices have r + 2 children by default. Beyond the
/// horizon every vertex keeps a single aggregated frontier edge carrying its
/// full downward weight, so measures and boundary cuts inside the safe region
/// stay exact.
GraphFamily make_rapidly_branching_tree(int horizon);
GraphFamily make_rapidly_branching_tree(const std::function<int(int)>& branching, int horizon);

/// Lookup for the CLI: builds a family by machine name with parameter map.
GraphFamily family_by_name(const std::string& name,
                           const std::map<std::string, double>& params);
std::vector<std::string> family_names();

}  // namespace graphspec
