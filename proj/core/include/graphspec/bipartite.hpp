#pragma once

#include <optional>
#include <vector>

#include "graphspec/weighted_graph.hpp"

namespace graphspec {

struct Bipartition {
  VertexSet first;   // class of the smallest id in each component
  VertexSet second;
};

/// Two-coloring of the subgraph induced on `support`, or nullopt if it
/// contains an odd closed walk (including any self-loop). Deterministic:
/// BFS from the smallest id of each component, smallest id colored first.
std::optional<Bipartition> bipartition(const WeightedGraph& g, const VertexSet& support);

/// Length of the shortest odd circuit in the induced subgraph together with a
/// witness. A self-loop counts as an odd circuit of length 1. Infinite
/// (length unset) exactly when the induced subgraph is bipartite.
struct OddGirth {
  std::optional<int> length;
  std::vector<int> witness;  // circuit vertices, closed implicitly
  bool is_finite() const { return length.has_value(); }
};

OddGirth odd_girth(const WeightedGraph& g, const VertexSet& support);

}  // namespace graphspec
