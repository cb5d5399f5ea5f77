#pragma once

#include <string>

#include "json.hpp"

#include "graphspec/comparison.hpp"
#include "graphspec/exhaustion.hpp"
#include "graphspec/family.hpp"
#include "graphspec/infinity.hpp"
#include "graphspec/isoperimetry.hpp"
#include "graphspec/spectral.hpp"
#include "graphspec/weighted_graph.hpp"

namespace graphspec {

using Json = nlohmann::ordered_json;

/// Graph file format: {"vertices": N, "edges": [[u, v, w], ...]} with u == v
/// encoding a self-loop; duplicate edges are rejected.
WeightedGraph graph_from_json(const Json& j);
WeightedGraph load_graph(const std::string& path);
Json to_json(const WeightedGraph& g);

Json to_json(const VertexSet& s);
Json to_json(const PartitionPair& p);
Json to_json(const SpectralResult& r);  // {"eigenvalues":..., "residual":..., ...}
Json to_json(const IsoperimetricResult& r);
Json to_json(const CheegerPairReport& r);
Json to_json(const ComparisonReport& r);
Json to_json(const ExhaustionReport& r);
Json to_json(const SpectrumBounds& r);
Json to_json(const InfinityConstants& r);
Json to_json(const TraceBoundReport& r);
Json to_json(const VolumeGrowthReport& r);
Json family_manifest(const GraphFamily& f);

std::string exhaustion_csv(const ExhaustionReport& r);
std::string infinity_csv(const InfinityConstants& r);

}  // namespace graphspec
