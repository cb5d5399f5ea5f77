#pragma once

#include <vector>

namespace graphspec {

/// Dense row-major square matrix.
struct Matrix {
  int n = 0;
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}
  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  static Matrix identity(int size);
};

struct JacobiResult {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j is the eigenvector for values[j]
  int sweeps = 0;
  double off_frobenius = 0.0;
};

/// Cyclic Jacobi diagonalization of a symmetric matrix. Rotates until the
/// off-diagonal Frobenius norm drops below rel_tol times the input norm.
/// Eigenpairs are sorted ascending; exact eigenvalue ties are broken by
/// lexicographic comparison of sign-normalized eigenvectors. Throws
/// std::runtime_error when the sweep limit is exhausted.
JacobiResult jacobi_eigen(Matrix a, double rel_tol = 1e-12, int max_sweeps = 100);

}  // namespace graphspec
