#include "graphspec/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace graphspec {

std::vector<double> SpectralResult::eigenvector(int k) const {
  std::vector<double> f(static_cast<size_t>(eigenvectors.n));
  for (int i = 0; i < eigenvectors.n; ++i) f[static_cast<size_t>(i)] = eigenvectors.at(i, k);
  return f;
}

SpectralResult spectrum(const DirichletOperator& op) {
  const int n = op.size();
  if (n > kEigensolverHardCap)
    throw std::invalid_argument("omega exceeds the dense eigensolver cap");
  JacobiResult jr = jacobi_eigen(op.symmetric_form());

  SpectralResult out;
  out.eigenvalues = std::move(jr.values);
  out.eigenvectors_sym = jr.vectors;
  out.sweeps = jr.sweeps;
  out.off_frobenius = jr.off_frobenius;

  // Back-transform f = D^{-1/2} g; columns become mu-orthonormal.
  out.eigenvectors = Matrix(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      out.eigenvectors.at(i, j) =
          out.eigenvectors_sym.at(i, j) / std::sqrt(op.ambient_measure(i));

  double worst = 0.0;
  std::vector<double> f(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) f[static_cast<size_t>(i)] = out.eigenvectors.at(i, j);
    std::vector<double> lf = op.apply(f);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = lf[static_cast<size_t>(i)] -
                 out.eigenvalues[static_cast<size_t>(j)] * f[static_cast<size_t>(i)];
      r2 += d * d;
    }
    worst = std::max(worst, std::sqrt(r2));
  }
  out.max_residual = worst;
  return out;
}

double q_smallest(const DirichletOperator& op, const SpectralResult& result) {
  std::vector<double> f = result.eigenvector(result.size() - 1);
  double xi = q_form(op, f, f) / mu_inner(op, f, f);
  double direct = 2.0 - result.lambda_max();
  if (std::abs(xi - direct) > 1e-9)
    throw std::runtime_error("q_smallest: form route disagrees with 2 - lambda_max");
  return xi;
}

double q_smallest(const DirichletOperator& op) {
  SpectralResult r = spectrum(op);
  return q_smallest(op, r);
}

}  // namespace graphspec
