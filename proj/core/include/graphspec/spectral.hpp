#pragma once

#include <vector>

#include "graphspec/dirichlet.hpp"

namespace graphspec {

/// Full Dirichlet spectrum. Eigenvectors are held both in the symmetric
/// similarity basis (orthonormal columns) and in the original basis
/// (mu-orthonormal columns, f = D^{-1/2} g).
struct SpectralResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // original basis
  Matrix eigenvectors_sym;          // similarity basis
  double max_residual = 0.0;        // max over pairs of |Lf - lambda f|_2
  double off_frobenius = 0.0;
  int sweeps = 0;

  double lambda1() const { return eigenvalues.front(); }
  double lambda_max() const { return eigenvalues.back(); }
  int size() const { return static_cast<int>(eigenvalues.size()); }
  std::vector<double> eigenvector(int k) const;
};

inline constexpr int kEigensolverHardCap = 2000;

SpectralResult spectrum(const DirichletOperator& op);

/// Smallest eigenvalue of the companion operator 2I - Laplacian, evaluated
/// independently through the sum form on the top eigenvector; throws if the
/// two routes disagree beyond 1e-9.
double q_smallest(const DirichletOperator& op, const SpectralResult& result);
double q_smallest(const DirichletOperator& op);

}  // namespace graphspec
