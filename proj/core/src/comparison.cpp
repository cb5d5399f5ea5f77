#include "graphspec/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "graphspec/metric.hpp"

namespace graphspec {

double kappa(const WeightedGraph& g, int x0, int radius) {
  auto dist = g.distances_from(x0);
  auto splits = radial_splits(g, x0);
  double k = 0.0;
  for (int x = 0; x < g.vertex_count(); ++x) {
    int dx = dist[static_cast<size_t>(x)];
    if (dx < 0 || dx > radius) continue;
    k = std::max(k, splits[static_cast<size_t>(x)].lateral / g.measure(x));
  }
  return k;
}

namespace {

// Enumerates simple cycles of length <= max_len whose vertices lie in a
// region, each cycle rooted at its smallest vertex, and reports odd ones.
struct CycleScan {
  const WeightedGraph& g;
  const std::vector<char>& in_region;
  int max_len;
  std::uint64_t node_cap;
  std::uint64_t nodes = 0;
  bool capped = false;
  std::vector<int> path;
  std::vector<char> on_path;
  std::vector<int> dist_root;
  // adjacent pairs (x, y) with both on some short odd circuit
  std::set<std::pair<int, int>>& marked;

  CycleScan(const WeightedGraph& graph, const std::vector<char>& region, int len_cap,
            std::uint64_t cap, std::set<std::pair<int, int>>& out)
      : g(graph), in_region(region), max_len(len_cap), node_cap(cap),
        on_path(static_cast<size_t>(graph.vertex_count()), 0), marked(out) {}

  void record_cycle() {
    for (size_t i = 0; i < path.size(); ++i) {
      int x = path[i];
      for (const auto& nb : g.neighbors(x)) {
        if (nb.vertex == x) continue;
        if (on_path[static_cast<size_t>(nb.vertex)]) {
          marked.insert({x, nb.vertex});
          marked.insert({nb.vertex, x});
        }
      }
    }
  }

  void dfs(int root, int v) {
    if (capped) return;
    if (++nodes > node_cap) {
      capped = true;
      return;
    }
    int len = static_cast<int>(path.size());
    for (const auto& nb : g.neighbors(v)) {
      int u = nb.vertex;
      if (u == v) continue;
      if (u == root && len >= 3) {
        if (len % 2 == 1 && path[1] < path.back()) record_cycle();
        continue;
      }
      if (u <= root || !in_region[static_cast<size_t>(u)]) continue;
      if (on_path[static_cast<size_t>(u)]) continue;
      // pushing u gives a path of len edges; the way back needs dist_root more
      if (len + dist_root[static_cast<size_t>(u)] > max_len) continue;
      path.push_back(u);
      on_path[static_cast<size_t>(u)] = 1;
      dfs(root, u);
      on_path[static_cast<size_t>(u)] = 0;
      path.pop_back();
      if (capped) return;
    }
  }

  void run(int root) {
    // BFS distances to the root within the region
    dist_root.assign(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> queue{root};
    dist_root[static_cast<size_t>(root)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (const auto& nb : g.neighbors(x)) {
        if (nb.vertex == x || !in_region[static_cast<size_t>(nb.vertex)]) continue;
        if (dist_root[static_cast<size_t>(nb.vertex)] < 0) {
          dist_root[static_cast<size_t>(nb.vertex)] = dist_root[static_cast<size_t>(x)] + 1;
          queue.push_back(nb.vertex);
        }
      }
    }
    for (size_t i = 0; i < dist_root.size(); ++i)
      if (dist_root[i] < 0) dist_root[i] = g.vertex_count();  // unreachable, prunes
    path.assign(1, root);
    on_path[static_cast<size_t>(root)] = 1;
    dfs(root, root);
    on_path[static_cast<size_t>(root)] = 0;
  }
};

}  // namespace

ClusteringResult clustering_coefficient(const WeightedGraph& g, int x0, int radius,
                                        std::uint64_t node_cap) {
  auto dist = g.distances_from(x0);
  const int max_len = 2 * radius + 1;
  // Circuits of length <= 2r+1 through a ball vertex stay within distance
  // 2r of the center.
  std::vector<char> region(static_cast<size_t>(g.vertex_count()), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = dist[static_cast<size_t>(v)];
    if (d >= 0 && d <= 2 * radius) region[static_cast<size_t>(v)] = 1;
  }

  std::set<std::pair<int, int>> marked;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (region[static_cast<size_t>(v)] && g.loop_weight(v) > 0.0) marked.insert({v, v});

  ClusteringResult out;
  CycleScan scan(g, region, max_len, node_cap, marked);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (!region[static_cast<size_t>(root)]) continue;
    scan.run(root);
    if (scan.capped) {
      out.exact = false;
      break;
    }
  }

  double c = 0.0;
  for (int x = 0; x < g.vertex_count(); ++x) {
    int dx = dist[static_cast<size_t>(x)];
    if (dx < 0 || dx > radius) continue;
    double w = 0.0;
    for (const auto& nb : g.neighbors(x))
      if (marked.count({x, nb.vertex})) w += nb.weight;
    c = std::max(c, w / g.measure(x));
  }
  out.value = c;
  return out;
}

bool ComparisonReport::all_hold() const {
  return std::all_of(bounds.begin(), bounds.end(),
                     [](const BoundCheck& b) { return b.holds; });
}

ComparisonReport comparison_bounds(const WeightedGraph& g, int x0, int r,
                                   const EnumerationCaps& caps) {
  if (r < 1) throw std::invalid_argument("radius must be >= 1");
  const double pi = std::numbers::pi;
  ComparisonReport rep;
  rep.center = x0;
  rep.radius = r;
  VertexSet b = ball(g, x0, r);
  rep.ball_size = b.size();
  rep.kappa_value = kappa(g, x0, r);
  ClusteringResult cl = clustering_coefficient(g, x0, r);
  rep.clustering_value = cl.value;
  rep.clustering_exact = cl.exact;

  auto dist = g.distances_from(x0);
  auto splits = radial_splits(g, x0);
  double sup_ratio = 0.0;
  double inf_ratio = std::numeric_limits<double>::infinity();
  for (int x : b) {
    if (x == x0) continue;  // the center has no inward edge
    double ratio = g.measure(x) / splits[static_cast<size_t>(x)].inward;
    sup_ratio = std::max(sup_ratio, ratio);
    inf_ratio = std::min(inf_ratio, ratio);
  }
  if (b.size() < 2) {
    rep.notes.push_back("ball has no vertex besides the center; no bounds emitted");
    return rep;
  }
  rep.l_sup = sup_ratio;
  rep.l_inf = inf_ratio;
  const double k = rep.kappa_value;

  // Sup-ratio model: any l >= sup ratio works, so round up to the model range.
  {
    double l = std::max(sup_ratio, 2.0);
    if (sup_ratio < 2.0)
      rep.notes.push_back("sup ratio below 2; rounded up to l = 2 for the lower bound");
    HalfLineModel model = HalfLineModel::solve(l, r);
    rep.bounds.push_back({"model_sup_lambda_max_lower", "lower", "lambda_max",
                          model.lambda_max - 2.0 * k, std::nullopt, true});
    double amp = 2.0 * std::sqrt(l - 1.0) / l;
    double closed = (l > 2.0) ? 1.0 + amp * std::cos(pi / (r + 1)) - 2.0 * k
                              : 1.0 + std::cos(pi / (2.0 * (r + 1))) - 2.0 * k;
    rep.bounds.push_back(
        {"closed_sup_lambda_max_lower", "lower", "lambda_max", closed, std::nullopt, true});
  }

  // Inf-ratio model: requires the inf itself to reach 2.
  if (inf_ratio >= 2.0) {
    double l = inf_ratio;
    HalfLineModel model = HalfLineModel::solve(l, r);
    rep.bounds.push_back({"model_inf_lambda1_lower", "lower", "lambda1",
                          model.lambda1 - k, std::nullopt, true});
    rep.bounds.push_back({"model_inf_lambda_max_upper", "upper", "lambda_max",
                          model.lambda_max + k, std::nullopt, true});
    double amp = 2.0 * std::sqrt(l - 1.0) / l;
    if (l > 2.0) {
      double eta = 2.0 * (l - 1.0) / (l - 2.0);
      rep.bounds.push_back({"closed_inf_lambda1_lower", "lower", "lambda1",
                            1.0 - amp * std::cos(pi / (r + eta)) - k, std::nullopt, true});
      rep.bounds.push_back({"closed_inf_lambda_max_upper", "upper", "lambda_max",
                            1.0 + amp * std::cos(pi / (r + eta)) + k, std::nullopt, true});
    }
  } else {
    rep.notes.push_back("inf ratio below 2; hypothesis fails, no inf-model bounds");
  }

  if (b.size() <= caps.eigensolver) {
    DirichletOperator op(g, b);
    SpectralResult sp = spectrum(op);
    rep.actual_lambda1 = sp.lambda1();
    rep.actual_lambda_max = sp.lambda_max();
    const double tol = 1e-9;
    for (auto& bc : rep.bounds) {
      double actual = (bc.quantity == "lambda1") ? sp.lambda1() : sp.lambda_max();
      bc.actual = actual;
      bc.holds = (bc.kind == "lower") ? (bc.bound <= actual + tol) : (actual <= bc.bound + tol);
    }
  }
  return rep;
}

double barta_lower(const DirichletOperator& op, std::span<const double> f) {
  for (double x : f)
    if (x == 0.0) throw std::invalid_argument("function must be nowhere zero");
  std::vector<double> lf = op.apply(f);
  double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < op.size(); ++i)
    inf = std::min(inf, lf[static_cast<size_t>(i)] / f[static_cast<size_t>(i)]);
  return inf;
}

double barta_lower_lambda1(const DirichletOperator& op, std::span<const double> f) {
  for (double x : f)
    if (!(x > 0.0)) throw std::invalid_argument("function must be strictly positive");
  return barta_lower(op, f);
}

}  // namespace graphspec
