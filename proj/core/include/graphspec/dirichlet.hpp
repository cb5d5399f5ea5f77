#pragma once

#include <span>
#include <vector>

#include "graphspec/jacobi.hpp"
#include "graphspec/weighted_graph.hpp"

namespace graphspec {

/// Normalized Laplacian with Dirichlet boundary conditions on a finite subset
/// omega of an ambient graph. Vertex measures come from the ambient graph,
/// including neighbors outside omega; the weight matrix is restricted to
/// omega. For omega = V this degenerates to the ordinary normalized
/// Laplacian. The caller keeps the ambient graph alive.
class DirichletOperator {
public:
  DirichletOperator(const WeightedGraph& ambient, VertexSet omega);

  const WeightedGraph& ambient() const { return *ambient_; }
  const VertexSet& omega() const { return omega_; }
  int size() const { return omega_.size(); }

  /// Ambient measure of the vertex at the given omega position.
  double ambient_measure(int position) const {
    return degree_[static_cast<size_t>(position)];
  }

  /// Symmetric similarity form I - D^{-1/2} W D^{-1/2}; same spectrum.
  const Matrix& symmetric_form() const { return sym_; }

  /// Pointwise action f(x) - (1/mu(x)) sum_{y in omega} mu_xy f(y),
  /// f indexed by omega position.
  std::vector<double> apply(std::span<const double> f) const;

  /// Position of a vertex id inside omega, -1 if absent.
  int position_of(int vertex) const;

private:
  const WeightedGraph* ambient_;
  VertexSet omega_;
  std::vector<double> degree_;
  Matrix sym_;
};

/// Weighted inner product (f,g)_mu over omega.
double mu_inner(const DirichletOperator& op, std::span<const double> f,
                std::span<const double> g);

/// Energy form sum over edges theta_xy (f(x)-f(y))(g(x)-g(y)), where f, g are
/// extended by zero outside omega, theta_xy = mu_xy on proper edges and
/// mu_xx/2 on loops. Equals the mu-inner product of (Dirichlet Laplacian f)
/// against g.
double green_form(const DirichletOperator& op, std::span<const double> f,
                  std::span<const double> g);

/// Companion form sum over edges theta_xy (f(x)+f(y))(g(x)+g(y)); the
/// quadratic version controls 2 - lambda.
double q_form(const DirichletOperator& op, std::span<const double> f,
              std::span<const double> g);

/// green_form(f,f) / (f,f)_mu. Throws on the zero function.
double rayleigh(const DirichletOperator& op, std::span<const double> f);

}  // namespace graphspec
