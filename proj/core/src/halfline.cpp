#include "graphspec/halfline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace graphspec {

namespace {

double g_r(double theta, int r) {
  return std::sin((r + 1) * theta) * std::cos(theta) / std::sin(r * theta);
}

}  // namespace

double halfline_theta(double l, int r) {
  if (l < 2.0) throw std::invalid_argument("half-line parameter must be >= 2");
  if (r < 1) throw std::invalid_argument("radius must be >= 1");
  const double pi = std::numbers::pi;
  if (l == 2.0) return pi / (2.0 * (r + 1));

  const double eta = 2.0 * (l - 1.0) / (l - 2.0);
  double lo = std::max(pi / (r + eta), pi / (2.0 * (r + 1)));
  double hi = pi / (r + 1);
  const double target = l / (2.0 * (l - 1.0));
  // g decreases from above the target to 0 across the bracket; the upper end
  // stays below the sin(r theta) singularity at pi/r.
  double glo = g_r(lo, r) - target;
  double ghi = g_r(hi, r) - target;
  if (glo < 0.0 || ghi > 0.0)
    throw std::runtime_error("half-line root bracket failed: g(lo)-t=" +
                             std::to_string(glo) + " g(hi)-t=" + std::to_string(ghi));
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double gm = g_r(mid, r) - target;
    if (gm >= 0.0) lo = mid;
    else hi = mid;
    if (hi - lo < 1e-13) break;
  }
  return 0.5 * (lo + hi);
}

HalfLineModel HalfLineModel::solve(double l, int r) {
  HalfLineModel m;
  m.l = l;
  m.r = r;
  m.theta = halfline_theta(l, r);
  m.eta = (l > 2.0) ? 2.0 * (l - 1.0) / (l - 2.0) : 0.0;
  const double amp = 2.0 * std::sqrt(l - 1.0) / l;
  m.lambda1 = 1.0 - amp * std::cos(m.theta);
  m.lambda_max = 2.0 - m.lambda1;
  m.f1.resize(static_cast<size_t>(r) + 1);
  m.fmax.resize(static_cast<size_t>(r) + 1);
  for (int s = 0; s <= r; ++s) {
    double v = std::pow(l - 1.0, -0.5 * s) * std::sin((r + 1 - s) * m.theta);
    m.f1[static_cast<size_t>(s)] = v;
    m.fmax[static_cast<size_t>(s)] = (s % 2 == 0) ? v : -v;
  }
  return m;
}

WeightedGraph halfline_graph(double l, int n) {
  if (l < 2.0) throw std::invalid_argument("half-line parameter must be >= 2");
  if (n < 2) throw std::invalid_argument("half-line length must be >= 2");
  if (l > 2.0 && n * std::log(l - 1.0) > 600.0)
    throw std::invalid_argument("geometric weights would overflow");
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    edges.push_back({i, i + 1, std::pow(l - 1.0, i)});
  return WeightedGraph(n + 1, edges);
}

}  // namespace graphspec
