#include "graphspec/family.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "graphspec/bipartite.hpp"
#include "graphspec/metric.hpp"
#include "graphspec/dirichlet.hpp"
#include "graphspec/halfline.hpp"
#include "graphspec/spectral.hpp"

namespace graphspec {

GraphFamily::GraphFamily(std::string name, std::string params, WeightedGraph graph,
                         int base_vertex, int safe_radius,
                         std::function<VertexSet(int)> exhaustion, int max_exhaustion,
                         std::vector<std::string> labels, FamilyMetadata metadata)
    : name_(std::move(name)),
      params_(std::move(params)),
      graph_(std::make_shared<WeightedGraph>(std::move(graph))),
      base_(base_vertex),
      safe_radius_(safe_radius),
      exhaustion_(std::move(exhaustion)),
      max_exhaustion_(max_exhaustion),
      labels_(std::move(labels)),
      metadata_(std::move(metadata)) {
  if (static_cast<int>(labels_.size()) != graph_->vertex_count())
    throw std::invalid_argument("label count must match vertex count");
  for (int v = 0; v < graph_->vertex_count(); ++v) label_index_[labels_[static_cast<size_t>(v)]] = v;
  depth_ = graph_->distances_from(base_);

  // Construction-time sanity: nesting, safety, and declared structure flags.
  for (int n = 1; n < std::min(max_exhaustion_, 6); ++n) {
    VertexSet a = exhaustion_(n);
    VertexSet b = exhaustion_(n + 1);
    if (a.empty() || !a.is_subset_of(b))
      throw std::runtime_error("family exhaustion is not nested: " + name_);
    require_safe(b);
  }
  if (metadata_.has_loops != graph_->has_loops())
    throw std::runtime_error("family loop flag mismatch: " + name_);
  if (max_exhaustion_ >= 3) {
    bool probe_bipartite = bipartition(*graph_, exhaustion_(3)).has_value();
    if (probe_bipartite != metadata_.bipartite)
      throw std::runtime_error("family bipartite flag mismatch: " + name_);
  }
}

bool GraphFamily::is_safe(const VertexSet& s) const {
  for (int v : s) {
    int d = depth_[static_cast<size_t>(v)];
    if (d < 0 || d > safe_radius_) return false;
  }
  return true;
}

void GraphFamily::require_safe(const VertexSet& s) const {
  if (!is_safe(s))
    throw std::invalid_argument("set leaves the explored region of family " + name_);
}

VertexSet GraphFamily::exhaustion(int n) const {
  if (n < 1 || n > max_exhaustion_)
    throw std::invalid_argument("exhaustion index out of range for family " + name_);
  return exhaustion_(n);
}

VertexSet GraphFamily::metric_ball(int x0, int radius) const {
  VertexSet b = ball(*graph_, x0, radius);
  require_safe(b);
  return b;
}

int GraphFamily::id_of(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) throw std::invalid_argument("unknown vertex label " + label);
  return it->second;
}

void GraphFamily::add_named_set(const std::string& key, VertexSet s) {
  named_sets_[key] = std::move(s);
}

namespace {

// Zigzag id for a two-sided integer coordinate: 0, 1, -1, 2, -2, ...
int zigzag(int k) { return k > 0 ? 2 * k - 1 : -2 * k; }

void validate_closed_form(const GraphFamily& fam,
                          const std::function<double(int)>& lambda1_of,
                          const std::function<double(int)>& lambda_max_of) {
  for (int n = 2; n <= std::min(10, fam.max_exhaustion()); ++n) {
    DirichletOperator op(fam.graph(), fam.exhaustion(n));
    SpectralResult sp = spectrum(op);
    if (std::abs(sp.lambda1() - lambda1_of(n)) > 1e-9 ||
        std::abs(sp.lambda_max() - lambda_max_of(n)) > 1e-9)
      throw std::runtime_error("family generator rejected: eigenvalues of " + fam.name() +
                               " do not reproduce the expected closed form");
  }
}

}  // namespace

GraphFamily make_infinite_path(int horizon) {
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  const int lim = horizon + 1;
  const int n = 2 * lim + 1;
  std::vector<WeightedEdge> edges;
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int k = -lim; k <= lim; ++k) labels[static_cast<size_t>(zigzag(k))] = std::to_string(k);
  for (int k = -lim; k < lim; ++k) edges.push_back({zigzag(k), zigzag(k + 1), 1.0});

  auto exh = [](int count) {
    std::vector<int> ids;
    for (int i = 0; i < count; ++i) ids.push_back(zigzag(i));
    return VertexSet(std::move(ids));
  };
  FamilyMetadata md;
  md.bipartite = true;
  md.hbar_upper = 1.0;
  md.declared_tail = TailConstants{0.5, 0.0};
  return GraphFamily("infinite_path", "horizon=" + std::to_string(horizon),
                     WeightedGraph(n, edges), zigzag(0), horizon, exh, horizon + 1,
                     std::move(labels), std::move(md));
}

GraphFamily make_ladder(int horizon) {
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  const int lim = horizon + 1;
  auto id = [](int k, int s) { return 2 * zigzag(k) + s; };
  const int n = 2 * (2 * lim + 1);
  std::vector<WeightedEdge> edges;
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int k = -lim; k <= lim; ++k)
    for (int s = 0; s <= 1; ++s)
      labels[static_cast<size_t>(id(k, s))] = std::to_string(k) + (s ? "'" : "");
  for (int k = -lim; k <= lim; ++k) {
    edges.push_back({id(k, 0), id(k, 1), 1.0});  // rung
    if (k < lim) {
      edges.push_back({id(k, 0), id(k + 1, 0), 1.0});
      edges.push_back({id(k, 1), id(k + 1, 1), 1.0});
      edges.push_back({id(k, 0), id(k + 1, 1), 1.0});  // both diagonals
      edges.push_back({id(k, 1), id(k + 1, 0), 1.0});
    }
  }
  auto exh = [id](int count) {
    std::vector<int> ids;
    for (int i = 0; i < count; ++i) {
      ids.push_back(id(i, 0));
      ids.push_back(id(i, 1));
    }
    return VertexSet(std::move(ids));
  };
  FamilyMetadata md;
  md.bipartite = false;
  md.hbar_upper = 0.8;  // half of the limiting top eigenvalue 8/5
  GraphFamily fam("ladder", "horizon=" + std::to_string(horizon), WeightedGraph(n, edges),
                  id(0, 0), horizon, exh, horizon + 1, std::move(labels), std::move(md));
  const double pi = std::numbers::pi;
  validate_closed_form(
      fam, [pi](int k) { return 0.8 * (1.0 - std::cos(pi / (k + 1))); },
      [pi](int k) { return 0.8 * (1.0 + std::cos(pi / (k + 1))); });
  return fam;
}

GraphFamily make_cayley_line_triangle(int horizon) {
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  const int lim = horizon + 1;
  auto id = [](int k, int a) { return 3 * zigzag(k) + a; };
  const int n = 3 * (2 * lim + 1);
  std::vector<WeightedEdge> edges;
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int k = -lim; k <= lim; ++k)
    for (int a = 0; a < 3; ++a) {
      labels[static_cast<size_t>(id(k, a))] = std::to_string(k) + "," + std::to_string(a);
      if (a < 2) edges.push_back({id(k, a), id(k, a + 1), 1.0});
      if (k < lim) edges.push_back({id(k, a), id(k + 1, a), 1.0});
    }
  for (int k = -lim; k <= lim; ++k) edges.push_back({id(k, 0), id(k, 2), 1.0});

  auto exh = [id](int count) {
    std::vector<int> ids;
    for (int i = 0; i < count; ++i)
      for (int a = 0; a < 3; ++a) ids.push_back(id(i, a));
    return VertexSet(std::move(ids));
  };
  FamilyMetadata md;
  md.bipartite = false;
  md.hbar_upper = 0.875;  // half of the limiting top eigenvalue 7/4
  GraphFamily fam("cayley_line_triangle", "horizon=" + std::to_string(horizon),
                  WeightedGraph(n, edges), id(0, 0), horizon, exh, horizon + 1,
                  std::move(labels), std::move(md));
  const double pi = std::numbers::pi;
  validate_closed_form(
      fam, [pi](int k) { return 0.5 * (1.0 - std::cos(pi / (k + 1))); },
      [pi](int k) { return 1.25 + 0.5 * std::cos(pi / (k + 1)); });
  return fam;
}

namespace {

GraphFamily make_branching_tree(const std::string& name, const std::string& params,
                                const std::function<int(int)>& branching, int horizon,
                                bool aggregate_frontier, FamilyMetadata md) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  std::vector<long long> level_count{1};
  std::vector<long long> level_offset{0};
  long long total = 1;
  for (int r = 0; r < horizon + 1; ++r) {
    int b = branching(r);
    if (b < 1) throw std::invalid_argument("branching schedule must be positive");
    long long next = level_count.back() * b;
    if (aggregate_frontier && r == horizon) next = level_count.back();
    level_offset.push_back(total);
    level_count.push_back(next);
    total += next;
    if (total > 2'000'000) throw std::invalid_argument("tree horizon too large to materialize");
  }

  std::vector<WeightedEdge> edges;
  std::vector<std::string> labels(static_cast<size_t>(total));
  labels[0] = "0.0";
  for (int r = 0; r <= horizon; ++r) {
    const long long off = level_offset[static_cast<size_t>(r)];
    const long long cnt = level_count[static_cast<size_t>(r)];
    const long long child_off = level_offset[static_cast<size_t>(r) + 1];
    const int b = branching(r);
    for (long long j = 0; j < cnt; ++j) {
      int v = static_cast<int>(off + j);
      if (aggregate_frontier && r == horizon) {
        int phantom = static_cast<int>(child_off + j);
        edges.push_back({v, phantom, static_cast<double>(b)});
        labels[static_cast<size_t>(phantom)] =
            std::to_string(r + 1) + ".agg" + std::to_string(j);
      } else {
        for (int t = 0; t < b; ++t) {
          int c = static_cast<int>(child_off + j * b + t);
          edges.push_back({v, c, 1.0});
          labels[static_cast<size_t>(c)] =
              std::to_string(r + 1) + "." + std::to_string(j * b + t);
        }
      }
    }
  }

  std::vector<std::pair<long long, long long>> cum;  // [0, end-of-level]
  long long acc = 0;
  for (size_t r = 0; r < level_count.size(); ++r) {
    acc += level_count[r];
    cum.push_back({level_offset[r], acc});
  }
  auto exh = [cum](int radius) {
    return VertexSet::range(0, static_cast<int>(cum[static_cast<size_t>(radius)].second));
  };
  return GraphFamily(name, params, WeightedGraph(static_cast<int>(total), edges), 0, horizon,
                     exh, horizon, std::move(labels), std::move(md));
}

}  // namespace

GraphFamily make_homogeneous_tree(int degree, int horizon) {
  if (degree < 2) throw std::invalid_argument("tree degree must be >= 2");
  FamilyMetadata md;
  md.bipartite = true;
  md.hbar_upper = 2.0 / degree;
  md.declared_tail = TailConstants{1.0 / degree, 0.0};
  auto branching = [degree](int r) { return r == 0 ? degree : degree - 1; };
  return make_branching_tree(
      "homogeneous_tree", "d=" + std::to_string(degree) + ",horizon=" + std::to_string(horizon),
      branching, horizon, /*aggregate_frontier=*/false, std::move(md));
}

GraphFamily make_halfline_family(double l, int horizon) {
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  WeightedGraph g = halfline_graph(l, horizon + 1);
  std::vector<std::string> labels;
  for (int k = 0; k <= horizon + 1; ++k) labels.push_back(std::to_string(k));
  auto exh = [](int r) { return VertexSet::range(0, r + 1); };
  FamilyMetadata md;
  md.bipartite = true;
  md.hbar_upper = 0.5 + std::sqrt(l - 1.0) / l;
  md.declared_tail = TailConstants{1.0 / l, 0.0};
  return GraphFamily("halfline", "l=" + std::to_string(l) + ",horizon=" + std::to_string(horizon),
                     std::move(g), 0, horizon, exh, horizon, std::move(labels), std::move(md));
}

GraphFamily make_selfloop_chain(int horizon) {
  if (horizon < 2 || horizon > 48) throw std::invalid_argument("chain horizon out of range");
  const int n = horizon + 2;
  std::vector<WeightedEdge> edges;
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) {
    labels.push_back(std::to_string(k));
    edges.push_back({k, k, std::pow(2.0, k)});
    if (k + 1 < n) edges.push_back({k, k + 1, 1.0});
  }
  auto exh = [](int count) { return VertexSet::range(0, count); };
  FamilyMetadata md;
  md.bipartite = false;
  md.has_loops = true;
  md.declared_tail = TailConstants{0.0, 1.0};
  return GraphFamily("selfloop_chain", "horizon=" + std::to_string(horizon),
                     WeightedGraph(n, edges), 0, horizon, exh, horizon + 1,
                     std::move(labels), std::move(md));
}

GraphFamily make_rapidly_branching_tree(int horizon) {
  return make_rapidly_branching_tree([](int r) { return r + 2; }, horizon);
}

GraphFamily make_rapidly_branching_tree(const std::function<int(int)>& branching, int horizon) {
  FamilyMetadata md;
  md.bipartite = true;
  md.declared_tail = TailConstants{0.0, 0.0};
  md.concentration_threshold = [](int k) { return 2.0 / (k + 2); };
  return make_branching_tree("rapidly_branching_tree", "horizon=" + std::to_string(horizon),
                             branching, horizon, /*aggregate_frontier=*/true, std::move(md));
}

GraphFamily make_lattice_with_bipartite_block(int m, int n, int horizon) {
  if (horizon < 3) throw std::invalid_argument("horizon must be >= 3");
  if (m < 1 || n < 1) throw std::invalid_argument("block sides must be positive");
  const int lim = horizon + 1;
  std::map<std::pair<int, int>, int> id;
  std::vector<std::string> labels;
  for (int x = -lim; x <= lim; ++x)
    for (int y = -lim; y <= lim; ++y) {
      if (std::abs(x) + std::abs(y) > lim) continue;
      id[{x, y}] = static_cast<int>(labels.size());
      labels.push_back(std::to_string(x) + "," + std::to_string(y));
    }
  std::vector<int> side_a, side_b;
  for (int i = 0; i < m; ++i) {
    side_a.push_back(static_cast<int>(labels.size()));
    labels.push_back("A" + std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    side_b.push_back(static_cast<int>(labels.size()));
    labels.push_back("B" + std::to_string(i));
  }
  std::vector<WeightedEdge> edges;
  for (const auto& [coord, v] : id) {
    auto [x, y] = coord;
    if (auto it = id.find({x + 1, y}); it != id.end()) edges.push_back({v, it->second, 1.0});
    if (auto it = id.find({x, y + 1}); it != id.end()) edges.push_back({v, it->second, 1.0});
  }
  edges.push_back({id.at({0, 1}), id.at({1, 0}), 1.0});  // the extra diagonal
  for (int a : side_a)
    for (int b : side_b) edges.push_back({a, b, 1.0});
  edges.push_back({id.at({0, 0}), side_a.front(), 1.0});  // connector

  const int total = static_cast<int>(labels.size());
  const int base = id.at({0, 0});
  std::vector<int> block = side_a;
  block.insert(block.end(), side_b.begin(), side_b.end());
  std::vector<int> omega = block;
  for (auto c : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1},
                 std::pair{0, -1}})
    omega.push_back(id.at(c));

  WeightedGraph graph(total, edges);
  auto exh = [graph = WeightedGraph(total, edges), base](int r) {
    std::vector<int> ids;
    auto dist = graph.distances_from(base);
    for (int v = 0; v < graph.vertex_count(); ++v)
      if (dist[static_cast<size_t>(v)] >= 0 && dist[static_cast<size_t>(v)] <= r)
        ids.push_back(v);
    return VertexSet(std::move(ids));
  };
  FamilyMetadata md;
  md.bipartite = false;
  GraphFamily fam("lattice_bipartite_block",
                  "m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                      ",horizon=" + std::to_string(horizon),
                  std::move(graph), base, horizon, exh, horizon, std::move(labels),
                  std::move(md));
  fam.add_named_set("example_omega", VertexSet(std::move(omega)));
  fam.add_named_set("block", VertexSet(std::move(block)));
  return fam;
}

GraphFamily family_by_name(const std::string& name,
                           const std::map<std::string, double>& params) {
  auto get = [&params](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (name == "infinite_path") return make_infinite_path(static_cast<int>(get("horizon", 40)));
  if (name == "ladder") return make_ladder(static_cast<int>(get("horizon", 32)));
  if (name == "cayley_line_triangle")
    return make_cayley_line_triangle(static_cast<int>(get("horizon", 32)));
  if (name == "homogeneous_tree")
    return make_homogeneous_tree(static_cast<int>(get("d", 3)),
                                 static_cast<int>(get("horizon", 6)));
  if (name == "halfline")
    return make_halfline_family(get("l", 2.0), static_cast<int>(get("horizon", 20)));
  if (name == "lattice_bipartite_block")
    return make_lattice_with_bipartite_block(static_cast<int>(get("m", 3)),
                                             static_cast<int>(get("n", 3)),
                                             static_cast<int>(get("horizon", 5)));
  if (name == "selfloop_chain") return make_selfloop_chain(static_cast<int>(get("horizon", 20)));
  if (name == "rapidly_branching_tree")
    return make_rapidly_branching_tree(static_cast<int>(get("horizon", 7)));
  throw std::invalid_argument("unknown family " + name);
}

std::vector<std::string> family_names() {
  return {"infinite_path",          "ladder",        "cayley_line_triangle",
          "homogeneous_tree",       "halfline",      "lattice_bipartite_block",
          "selfloop_chain",         "rapidly_branching_tree"};
}

}  // namespace graphspec
