#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphspec/dirichlet.hpp"
#include "graphspec/halfline.hpp"
#include "graphspec/isoperimetry.hpp"
#include "graphspec/spectral.hpp"
#include "graphspec/weighted_graph.hpp"

namespace graphspec {

/// Largest equidistant-neighbor weight fraction sup_{x in B(x0,r)} mu_0(x)/mu(x).
double kappa(const WeightedGraph& g, int x0, int radius);

/// sup over the ball of the weight fraction of neighbors sharing a short odd
/// circuit: the circuit may use any vertices and has length <= 2r+1. Computed
/// by enumerating short odd circuits; `exact` goes false when the node cap is
/// hit, in which case the value is a lower bound.
struct ClusteringResult {
  double value = 0.0;
  bool exact = true;
};

ClusteringResult clustering_coefficient(const WeightedGraph& g, int x0, int radius,
                                        std::uint64_t node_cap = 20'000'000);

struct BoundCheck {
  std::string name;
  std::string kind;  // "lower" or "upper", relative to the actual quantity
  std::string quantity;  // "lambda1" or "lambda_max"
  double bound = 0.0;
  std::optional<double> actual;
  bool holds = true;  // vacuously true until the actual value is known
};

/// Half-line comparison bounds for the ball B(x0, r): the sup-ratio model
/// gives a lower bound on lambda_max up to 2 kappa, the inf-ratio model gives
/// a lower bound on lambda_1 and an upper bound on lambda_max up to kappa.
/// Hypothesis failures (ratio below 2) suppress the affected bounds and are
/// recorded in notes. When the ball fits the eigensolver the actual spectrum
/// is attached and every bound is checked against it.
struct ComparisonReport {
  int center = 0;
  int radius = 0;
  double kappa_value = 0.0;
  double clustering_value = 0.0;
  bool clustering_exact = true;
  int ball_size = 0;
  std::optional<double> l_sup;
  std::optional<double> l_inf;
  std::vector<BoundCheck> bounds;
  std::optional<double> actual_lambda1;
  std::optional<double> actual_lambda_max;
  std::vector<std::string> notes;
  bool all_hold() const;
};

ComparisonReport comparison_bounds(const WeightedGraph& g, int x0, int r,
                                   const EnumerationCaps& caps = {});

/// inf_x (Lf)(x)/f(x) for a nowhere-zero f; a lower bound on lambda_max.
double barta_lower(const DirichletOperator& op, std::span<const double> f);

/// Same quotient for strictly positive f; a lower bound on lambda_1.
double barta_lower_lambda1(const DirichletOperator& op, std::span<const double> f);

}  // namespace graphspec
