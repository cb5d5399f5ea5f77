#include "graphspec/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphspec {

DirichletOperator::DirichletOperator(const WeightedGraph& ambient, VertexSet omega)
    : ambient_(&ambient), omega_(std::move(omega)) {
  if (omega_.empty()) throw std::invalid_argument("empty omega");
  const int n = omega_.size();
  degree_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double mu = ambient.measure(omega_[i]);
    if (!(mu > 0.0)) throw std::invalid_argument("isolated vertex in omega");
    degree_[static_cast<size_t>(i)] = mu;
  }
  sym_ = Matrix(n);
  for (int i = 0; i < n; ++i) {
    sym_.at(i, i) = 1.0;
    for (const auto& nb : ambient.neighbors(omega_[i])) {
      int j = position_of(nb.vertex);
      if (j < 0) continue;
      double entry = nb.weight / std::sqrt(degree_[static_cast<size_t>(i)] *
                                           degree_[static_cast<size_t>(j)]);
      if (j == i)
        sym_.at(i, i) -= entry;
      else
        sym_.at(i, j) = -entry;
    }
  }
}

int DirichletOperator::position_of(int vertex) const {
  const auto& ids = omega_.ids();
  auto it = std::lower_bound(ids.begin(), ids.end(), vertex);
  if (it != ids.end() && *it == vertex) return static_cast<int>(it - ids.begin());
  return -1;
}

std::vector<double> DirichletOperator::apply(std::span<const double> f) const {
  const int n = size();
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("size mismatch");
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (const auto& nb : ambient_->neighbors(omega_[i])) {
      int j = position_of(nb.vertex);
      if (j >= 0) acc += nb.weight * f[static_cast<size_t>(j)];
    }
    out[static_cast<size_t>(i)] =
        f[static_cast<size_t>(i)] - acc / degree_[static_cast<size_t>(i)];
  }
  return out;
}

double mu_inner(const DirichletOperator& op, std::span<const double> f,
                std::span<const double> g) {
  double s = 0.0;
  for (int i = 0; i < op.size(); ++i)
    s += op.ambient_measure(i) * f[static_cast<size_t>(i)] * g[static_cast<size_t>(i)];
  return s;
}

namespace {

// Shared edge iteration for the two forms: sign = -1 gives the difference
// form, sign = +1 the sum form. Each ambient edge incident to omega is
// visited once; functions vanish outside omega.
double edge_form(const DirichletOperator& op, std::span<const double> f,
                 std::span<const double> g, double sign) {
  const WeightedGraph& amb = op.ambient();
  double s = 0.0;
  for (int i = 0; i < op.size(); ++i) {
    int x = op.omega()[i];
    for (const auto& nb : amb.neighbors(x)) {
      if (nb.vertex == x) {
        // theta_xx = mu_xx / 2 on the loop edge
        double df = f[static_cast<size_t>(i)] + sign * f[static_cast<size_t>(i)];
        double dg = g[static_cast<size_t>(i)] + sign * g[static_cast<size_t>(i)];
        s += 0.5 * nb.weight * df * dg;
        continue;
      }
      int j = op.position_of(nb.vertex);
      if (j >= 0) {
        if (nb.vertex < x) continue;  // count internal edges once
        double df = f[static_cast<size_t>(i)] + sign * f[static_cast<size_t>(j)];
        double dg = g[static_cast<size_t>(i)] + sign * g[static_cast<size_t>(j)];
        s += nb.weight * df * dg;
      } else {
        s += nb.weight * f[static_cast<size_t>(i)] * g[static_cast<size_t>(i)];
      }
    }
  }
  return s;
}

}  // namespace

double green_form(const DirichletOperator& op, std::span<const double> f,
                  std::span<const double> g) {
  return edge_form(op, f, g, -1.0);
}

double q_form(const DirichletOperator& op, std::span<const double> f,
              std::span<const double> g) {
  return edge_form(op, f, g, 1.0);
}

double rayleigh(const DirichletOperator& op, std::span<const double> f) {
  double denom = mu_inner(op, f, f);
  if (!(denom > 0.0)) throw std::invalid_argument("rayleigh quotient of zero function");
  return green_form(op, f, f) / denom;
}

}  // namespace graphspec
