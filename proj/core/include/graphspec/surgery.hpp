#pragma once

#include "graphspec/weighted_graph.hpp"

namespace graphspec {

struct SurgeryResult {
  PartitionPair partition;
  int moves = 0;
};

/// Splits a loopless finite vertex set into (V1, V2) with
/// |E(V1,V2)| >= max{|E(V1,V1)|, |E(V2,V2)|} by repeated single-vertex moves:
/// while one side's internal weight exceeds the cross weight, move a vertex
/// whose same-side weight exceeds its cross weight. The cross weight strictly
/// increases with every move, so the loop terminates. Move selection is
/// deterministic: the violating side with the larger internal weight first,
/// then the largest gain, then the smallest id.
SurgeryResult surgery_partition(const WeightedGraph& g, const VertexSet& u);

}  // namespace graphspec
