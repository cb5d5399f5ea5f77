#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphspec/weighted_graph.hpp"

namespace graphspec {

/// Search-size limits for the exact enumerations. Values above a hard cap are
/// rejected; callers wanting larger sets use the heuristic variants.
struct EnumerationCaps {
  int cheeger = 20;       // 2^n subsets
  int dual_cheeger = 13;  // 3^n assignments
  int max_cut = 24;       // 2^(n-1) partitions
  int eigensolver = 2000;

  static constexpr EnumerationCaps hard_limits() { return {}; }
  /// True when every cap stays within the defaults above.
  bool within_hard_limits() const {
    EnumerationCaps hard = hard_limits();
    return cheeger <= hard.cheeger && dual_cheeger <= hard.dual_cheeger &&
           max_cut <= hard.max_cut && eigensolver <= hard.eigensolver;
  }
};

enum class SearchMethod { Exact, Heuristic };

struct IsoperimetricResult {
  double value = 0.0;
  SearchMethod method = SearchMethod::Exact;
  std::uint64_t candidates = 0;
  VertexSet witness;                          // minimizing U for the Cheeger constant
  std::optional<PartitionPair> pair_witness;  // maximizing pair for the dual constant
};

/// Exact Cheeger constant of omega inside the ambient graph: minimum of
/// |dU| / vol(U) over nonempty U subset of omega, boundary and volume taken in
/// the ambient graph. Witness is the lexicographically smallest optimum.
/// Requires #omega within the cap.
IsoperimetricResult cheeger_exact(const WeightedGraph& ambient, const VertexSet& omega,
                                  const EnumerationCaps& caps = {});

/// Greedy upper bound for sets above the cap; flagged Heuristic.
IsoperimetricResult cheeger_bound(const WeightedGraph& ambient, const VertexSet& omega);

/// Exact dual Cheeger constant: maximum of 2|E(V1,V2)| / (vol V1 + vol V2)
/// over disjoint nonempty pairs inside omega. Unordered pairs are
/// deduplicated: V1 holds the smallest participating id. Requires #omega >= 2
/// and within the cap. omega need not be connected; the optimum then lives in
/// its best component.
IsoperimetricResult dual_cheeger_exact(const WeightedGraph& ambient, const VertexSet& omega,
                                       const EnumerationCaps& caps = {});

/// Lower bound for sets above the cap: a surgery split (loopless sets) or
/// alternating BFS seed refined by greedy moves; flagged Heuristic.
IsoperimetricResult dual_cheeger_bound(const WeightedGraph& ambient, const VertexSet& omega);

struct AuxiliaryCheegerResult {
  double value = 0.0;
  VertexSet witness;
  VertexSet positive_part;  // P(g)
};

/// Exact minimum of |E(U, U^c)| / vol(U) over nonempty U inside the positive
/// support P(g) = {x in omega : g(x) > 0}; complement taken in the ambient
/// graph. g is indexed by omega position.
AuxiliaryCheegerResult auxiliary_cheeger(const WeightedGraph& ambient, const VertexSet& omega,
                                         std::span<const double> g,
                                         const EnumerationCaps& caps = {});

struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double margin = 0.0;  // rhs - lhs
};

/// Exact h and hbar together with the Dirichlet spectrum and the full set of
/// two-sided inequalities tying them to lambda_1 and lambda_max.
struct CheegerPairReport {
  double h = 0.0;
  double hbar = 0.0;
  double lambda1 = 0.0;
  double lambda_max = 0.0;
  bool loopless = true;
  IsoperimetricResult h_result;
  IsoperimetricResult hbar_result;
  std::vector<InequalityCheck> inequalities;
  bool all_hold() const;
};

CheegerPairReport verify_cheeger_pair(const WeightedGraph& ambient, const VertexSet& omega,
                                      const EnumerationCaps& caps = {});

}  // namespace graphspec
