#include "graphspec/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace graphspec {

Matrix Matrix::identity(int size) {
  Matrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1.0;
  return m;
}

namespace {

double off_diagonal_norm(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) s += m.at(i, j) * m.at(i, j);
  return std::sqrt(2.0 * s);
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (double x : m.a) s += x * x;
  return std::sqrt(s);
}

void normalize_column_sign(Matrix& v, int col) {
  double peak = 0.0;
  for (int i = 0; i < v.n; ++i) peak = std::max(peak, std::abs(v.at(i, col)));
  if (peak == 0.0) return;
  for (int i = 0; i < v.n; ++i) {
    double x = v.at(i, col);
    if (std::abs(x) > 1e-12 * peak) {
      if (x < 0.0)
        for (int k = 0; k < v.n; ++k) v.at(k, col) = -v.at(k, col);
      return;
    }
  }
}

}  // namespace

JacobiResult jacobi_eigen(Matrix a, double rel_tol, int max_sweeps) {
  const int n = a.n;
  if (n == 0) return {};
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);
  const double target = rel_tol * std::max(scale, 1e-300);

  int sweep = 0;
  double off = off_diagonal_norm(a);
  while (off > target) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("jacobi_eigen: no convergence after sweep limit");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (apq == 0.0) continue;
        double app = a.at(p, p), aqq = a.at(q, q);
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          double vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = c * vkp - s * vkq;
          v.at(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_diagonal_norm(a);
  }

  for (int j = 0; j < n; ++j) normalize_column_sign(v, j);

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto column_lex_less = [&](int cj, int ck) {
    for (int i = 0; i < n; ++i) {
      double x = v.at(i, cj), y = v.at(i, ck);
      if (x != y) return x < y;
    }
    return false;
  };
  const double tie = 1e-12 * std::max(scale, 1.0);
  std::sort(order.begin(), order.end(), [&](int j, int k) {
    double dj = a.at(j, j), dk = a.at(k, k);
    if (std::abs(dj - dk) > tie) return dj < dk;
    return column_lex_less(j, k);
  });

  JacobiResult out;
  out.values.resize(static_cast<size_t>(n));
  out.vectors = Matrix(n);
  for (int j = 0; j < n; ++j) {
    out.values[static_cast<size_t>(j)] = a.at(order[static_cast<size_t>(j)],
                                              order[static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i)
      out.vectors.at(i, j) = v.at(i, order[static_cast<size_t>(j)]);
  }
  out.sweeps = sweep;
  out.off_frobenius = off;
  return out;
}

}  // namespace graphspec
