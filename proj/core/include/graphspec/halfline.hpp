#pragma once

#include <vector>

#include "graphspec/weighted_graph.hpp"

namespace graphspec {

/// Smallest positive root theta of
///   sin((r+1) theta) cos(theta) / sin(r theta) = l / (2(l-1)).
/// Analytic pi/(2(r+1)) for l = 2; bisection on
/// [max{pi/(r+eta), pi/(2(r+1))}, pi/(r+1)] with eta = 2(l-1)/(l-2) for l > 2.
double halfline_theta(double l, int r);

/// Dirichlet eigendata of the radius-r ball in the geometric-weight half-line
/// with ratio parameter l >= 2: edge (i, i+1) has weight (l-1)^i, so every
/// interior vertex satisfies mu(x)/mu_-(x) = l. The ball spectrum is known in
/// closed form through the root theta; the model is bipartite, so
/// lambda_1 + lambda_max = 2 and the top eigenfunction is the sign-alternated
/// ground state.
struct HalfLineModel {
  double l = 2.0;
  int r = 1;
  double theta = 0.0;
  double eta = 0.0;  // 2(l-1)/(l-2), meaningful for l > 2
  double lambda1 = 0.0;
  double lambda_max = 0.0;
  std::vector<double> f1;    // ground state samples at s = 0..r, positive decreasing
  std::vector<double> fmax;  // top eigenfunction, alternating signs

  static HalfLineModel solve(double l, int r);
};

/// Explicit path 0..n with edge weights (l-1)^i. Guards against weight
/// overflow for large n * log(l-1).
WeightedGraph halfline_graph(double l, int n);

}  // namespace graphspec
