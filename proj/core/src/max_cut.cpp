#include "graphspec/max_cut.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace graphspec {

namespace {

constexpr double kTieTol = 1e-12;

struct CutSearch {
  int n;
  const std::vector<std::vector<double>>& w;
  std::vector<int> side;
  double best = -1.0;
  std::vector<int> best_side;
  std::uint64_t candidates = 0;
  double cross = 0.0;

  CutSearch(int size, const std::vector<std::vector<double>>& weights)
      : n(size), w(weights), side(static_cast<size_t>(size), 0) {}

  void run(int idx) {
    if (idx == n) {
      ++candidates;
      if (cross > best + kTieTol) {
        best = cross;
        best_side = side;
      } else if (cross >= best - kTieTol) {
        // prefer the lexicographically smaller first side
        for (int i = 0; i < n; ++i) {
          if (side[static_cast<size_t>(i)] != best_side[static_cast<size_t>(i)]) {
            if (side[static_cast<size_t>(i)] < best_side[static_cast<size_t>(i)])
              best_side = side;
            break;
          }
        }
      }
      return;
    }
    for (int s = 0; s <= 1; ++s) {
      if (idx == 0 && s == 1) break;  // pin vertex 0
      double add = 0.0;
      for (int j = 0; j < idx; ++j)
        if (side[static_cast<size_t>(j)] != s)
          add += w[static_cast<size_t>(idx)][static_cast<size_t>(j)];
      side[static_cast<size_t>(idx)] = s;
      cross += add;
      run(idx + 1);
      cross -= add;
    }
    side[static_cast<size_t>(idx)] = 0;
  }
};

double binomial(double n, int k) {
  if (n < k) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (n - i) / (i + 1);
  return r;
}

}  // namespace

MaxCutResult max_cut_exact(const WeightedGraph& g, const EnumerationCaps& caps) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("max cut needs at least two vertices");
  if (n > caps.max_cut) throw std::invalid_argument("graph exceeds the max cut cap");
  std::vector<std::vector<double>> w(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int v = 0; v < n; ++v)
    for (const auto& nb : g.neighbors(v))
      if (nb.vertex != v) w[static_cast<size_t>(v)][static_cast<size_t>(nb.vertex)] = nb.weight;

  CutSearch search(n, w);
  search.run(0);

  std::vector<int> a, b;
  for (int i = 0; i < n; ++i)
    (search.best_side[static_cast<size_t>(i)] == 0 ? a : b).push_back(i);
  if (b.empty()) {
    // edgeless optimum; return any proper split
    b.push_back(a.back());
    a.pop_back();
  }
  MaxCutResult out;
  out.value = search.best;
  out.candidates = search.candidates;
  out.partition = PartitionPair::compute(g, VertexSet(std::move(a)), VertexSet(std::move(b)));
  return out;
}

MaxCutBound max_cut_bound(int degree_bound, int odd_girth_value, double edge_count) {
  if (degree_bound < 2) throw std::invalid_argument("degree bound must be at least 2");
  if (odd_girth_value < 3 || odd_girth_value % 2 == 0)
    throw std::invalid_argument("odd girth must be an odd number >= 3");
  if (!(edge_count > 0.0)) throw std::invalid_argument("edge count must be positive");
  const double d = degree_bound;
  MaxCutBound out;
  if (odd_girth_value == 3) {
    out.delta = 2.0 / (3.0 * d * (d - 1.0));
  } else {
    const int s = (odd_girth_value - 1) / 2;
    double ball = std::pow(d, s);
    double binom = binomial(ball, odd_girth_value);
    if (binom < 1.0)
      throw std::invalid_argument(
          "degenerate circuit-count binomial for this (d, girth); "
          "use the exact-ball variant");
    out.delta = 1.0 / (d * odd_girth_value * binom);
  }
  out.bound = edge_count * (1.0 - out.delta);
  return out;
}

MaxCutBound max_cut_bound_exact_ball(int degree_bound, int odd_girth_value,
                                     double edge_count, long long ball_vertex_count) {
  if (degree_bound < 2) throw std::invalid_argument("degree bound must be at least 2");
  if (odd_girth_value < 3 || odd_girth_value % 2 == 0)
    throw std::invalid_argument("odd girth must be an odd number >= 3");
  if (!(edge_count > 0.0)) throw std::invalid_argument("edge count must be positive");
  const double d = degree_bound;
  MaxCutBound out;
  if (odd_girth_value == 3) {
    out.delta = 2.0 / (3.0 * d * (d - 1.0));
  } else {
    double binom = binomial(static_cast<double>(ball_vertex_count), odd_girth_value);
    if (binom < 1.0) throw std::invalid_argument("ball too small to carry an odd circuit");
    out.delta = 1.0 / (d * odd_girth_value * binom);
  }
  out.bound = edge_count * (1.0 - out.delta);
  return out;
}

}  // namespace graphspec
