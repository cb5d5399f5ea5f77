#pragma once

// Naive reference implementations used as independent oracles. These stay
// deliberately separate from the library code paths they check: dense weight
// matrices, digit-counter enumerations, and from-scratch ratios.

#include <cmath>
#include <vector>

#include "graphspec/weighted_graph.hpp"

namespace oracle {

inline std::vector<std::vector<double>> weight_matrix(const graphspec::WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> w(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int u = 0; u < n; ++u)
    for (const auto& nb : g.neighbors(u)) w[static_cast<size_t>(u)][static_cast<size_t>(nb.vertex)] = nb.weight;
  return w;
}

inline double volume(const graphspec::WeightedGraph& g, const std::vector<int>& s) {
  auto w = weight_matrix(g);
  double vol = 0.0;
  for (int x : s)
    for (int y = 0; y < g.vertex_count(); ++y) vol += w[static_cast<size_t>(x)][static_cast<size_t>(y)];
  return vol;
}

inline double cut(const graphspec::WeightedGraph& g, const std::vector<int>& a,
                  const std::vector<int>& b) {
  auto w = weight_matrix(g);
  double s = 0.0;
  for (int x : a)
    for (int y : b) s += w[static_cast<size_t>(x)][static_cast<size_t>(y)];
  return s;
}

inline double boundary(const graphspec::WeightedGraph& g, const std::vector<int>& s) {
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (int x : s) in[static_cast<size_t>(x)] = 1;
  auto w = weight_matrix(g);
  double out = 0.0;
  for (int x : s)
    for (int y = 0; y < g.vertex_count(); ++y)
      if (!in[static_cast<size_t>(y)]) out += w[static_cast<size_t>(x)][static_cast<size_t>(y)];
  return out;
}

// exact Cheeger constant by subset-mask enumeration
inline double cheeger(const graphspec::WeightedGraph& g, const std::vector<int>& omega) {
  double best = 1e300;
  const int m = static_cast<int>(omega.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> u;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) u.push_back(omega[static_cast<size_t>(i)]);
    best = std::min(best, boundary(g, u) / volume(g, u));
  }
  return best;
}

// exact dual Cheeger constant by ternary-digit enumeration
inline double dual_cheeger(const graphspec::WeightedGraph& g, const std::vector<int>& omega) {
  const int m = static_cast<int>(omega.size());
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  double best = 0.0;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> a, b;
    long long c = code;
    for (int i = 0; i < m; ++i) {
      int digit = static_cast<int>(c % 3);
      c /= 3;
      if (digit == 1) a.push_back(omega[static_cast<size_t>(i)]);
      if (digit == 2) b.push_back(omega[static_cast<size_t>(i)]);
    }
    if (a.empty() || b.empty()) continue;
    best = std::max(best, 2.0 * cut(g, a, b) / (volume(g, a) + volume(g, b)));
  }
  return best;
}

inline double max_cut(const graphspec::WeightedGraph& g) {
  const int n = g.vertex_count();
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> a{0}, b;
    for (int v = 1; v < n; ++v)
      (mask & (1u << (v - 1)) ? a : b).push_back(v);
    if (b.empty()) continue;
    best = std::max(best, cut(g, a, b));
  }
  return best;
}

// true if some simple cycle of exactly the given odd length exists
inline bool has_odd_circuit(const graphspec::WeightedGraph& g, int length) {
  const int n = g.vertex_count();
  auto w = weight_matrix(g);
  std::vector<int> path;
  std::vector<char> used(static_cast<size_t>(n), 0);
  bool found = false;
  auto dfs = [&](auto&& self, int v) -> void {
    if (found) return;
    if (static_cast<int>(path.size()) == length) {
      if (w[static_cast<size_t>(v)][static_cast<size_t>(path[0])] > 0.0 && path[0] < v) found = true;
      return;
    }
    for (int u = path[0] + 1; u < n; ++u) {
      if (used[static_cast<size_t>(u)] || w[static_cast<size_t>(v)][static_cast<size_t>(u)] == 0.0) continue;
      used[static_cast<size_t>(u)] = 1;
      path.push_back(u);
      self(self, u);
      path.pop_back();
      used[static_cast<size_t>(u)] = 0;
    }
  };
  for (int root = 0; root < n && !found; ++root) {
    path.assign(1, root);
    used.assign(static_cast<size_t>(n), 0);
    used[static_cast<size_t>(root)] = 1;
    dfs(dfs, root);
  }
  return found;
}

// dense Dirichlet action straight from the definition
inline std::vector<double> dirichlet_apply(const graphspec::WeightedGraph& g,
                                           const std::vector<int>& omega,
                                           const std::vector<double>& f) {
  auto w = weight_matrix(g);
  std::vector<double> out(f.size());
  for (size_t i = 0; i < omega.size(); ++i) {
    double mu = 0.0;
    for (int y = 0; y < g.vertex_count(); ++y) mu += w[static_cast<size_t>(omega[i])][static_cast<size_t>(y)];
    double acc = 0.0;
    for (size_t j = 0; j < omega.size(); ++j)
      acc += w[static_cast<size_t>(omega[i])][static_cast<size_t>(omega[j])] * f[j];
    out[i] = f[i] - acc / mu;
  }
  return out;
}

}  // namespace oracle
