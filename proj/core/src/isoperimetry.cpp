#include "graphspec/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "graphspec/spectral.hpp"
#include "graphspec/surgery.hpp"

namespace graphspec {

namespace {

constexpr double kTieTol = 1e-12;

// Dense restriction of the ambient graph to a small ground set.
struct Ground {
  std::vector<int> ids;
  std::vector<double> mu;    // ambient measures
  std::vector<double> loop;
  std::vector<std::vector<double>> w;  // symmetric weights within the ground set

  Ground(const WeightedGraph& g, const VertexSet& s) {
    ids = s.ids();
    const int m = static_cast<int>(ids.size());
    mu.resize(static_cast<size_t>(m));
    loop.resize(static_cast<size_t>(m));
    w.assign(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(m), 0.0));
    for (int i = 0; i < m; ++i) {
      mu[static_cast<size_t>(i)] = g.measure(ids[static_cast<size_t>(i)]);
      loop[static_cast<size_t>(i)] = g.loop_weight(ids[static_cast<size_t>(i)]);
      for (const auto& nb : g.neighbors(ids[static_cast<size_t>(i)])) {
        auto it = std::lower_bound(ids.begin(), ids.end(), nb.vertex);
        if (it != ids.end() && *it == nb.vertex)
          w[static_cast<size_t>(i)][static_cast<size_t>(it - ids.begin())] = nb.weight;
      }
    }
  }
  int size() const { return static_cast<int>(ids.size()); }
};

struct MinRatioSearch {
  const Ground& gr;
  double best = 0.0;
  std::vector<int> best_members;  // positions
  std::uint64_t candidates = 0;
  std::vector<int> current;
  double vol = 0.0;
  double internal = 0.0;  // |E(U,U)| with loops once, proper edges twice

  explicit MinRatioSearch(const Ground& ground) : gr(ground) {}

  void consider() {
    ++candidates;
    double ratio = (vol - internal) / vol;
    if (best_members.empty() && current.empty()) return;
    if (best_members.empty() || ratio < best - kTieTol) {
      best = ratio;
      best_members = current;
    } else if (ratio <= best + kTieTol &&
               std::lexicographical_compare(current.begin(), current.end(),
                                            best_members.begin(), best_members.end())) {
      best_members = current;
    }
  }

  void run(int idx) {
    if (idx == gr.size()) {
      if (!current.empty()) consider();
      return;
    }
    // include idx
    double add_internal = gr.loop[static_cast<size_t>(idx)];
    for (int j : current)
      add_internal += 2.0 * gr.w[static_cast<size_t>(idx)][static_cast<size_t>(j)];
    current.push_back(idx);
    vol += gr.mu[static_cast<size_t>(idx)];
    internal += add_internal;
    run(idx + 1);
    current.pop_back();
    vol -= gr.mu[static_cast<size_t>(idx)];
    internal -= add_internal;
    // exclude idx
    run(idx + 1);
  }
};

IsoperimetricResult min_boundary_ratio_exact(const WeightedGraph& ambient,
                                             const VertexSet& ground_set) {
  Ground gr(ambient, ground_set);
  MinRatioSearch search(gr);
  search.run(0);
  IsoperimetricResult out;
  out.value = search.best;
  out.method = SearchMethod::Exact;
  out.candidates = search.candidates;
  std::vector<int> ids;
  ids.reserve(search.best_members.size());
  for (int pos : search.best_members) ids.push_back(gr.ids[static_cast<size_t>(pos)]);
  out.witness = VertexSet(std::move(ids));
  return out;
}

struct DualSearch {
  const Ground& gr;
  double best = -1.0;
  std::vector<int> best_a;  // positions in V1
  std::vector<int> best_b;  // positions in V2
  std::uint64_t candidates = 0;
  std::vector<int> assign;  // 0 none, 1 V1, 2 V2
  double cross = 0.0, vol1 = 0.0, vol2 = 0.0;
  int count1 = 0, count2 = 0;

  explicit DualSearch(const Ground& ground)
      : gr(ground), assign(static_cast<size_t>(ground.size()), 0) {}

  void consider() {
    ++candidates;
    double ratio = 2.0 * cross / (vol1 + vol2);
    if (best < -0.5 || ratio > best + kTieTol) {
      best = ratio;
      capture();
    } else if (ratio >= best - kTieTol) {
      std::vector<int> a, b;
      collect(a, b);
      if (std::lexicographical_compare(a.begin(), a.end(), best_a.begin(), best_a.end()) ||
          (a == best_a &&
           std::lexicographical_compare(b.begin(), b.end(), best_b.begin(), best_b.end()))) {
        best_a = std::move(a);
        best_b = std::move(b);
      }
    }
  }

  void collect(std::vector<int>& a, std::vector<int>& b) const {
    for (int i = 0; i < gr.size(); ++i) {
      if (assign[static_cast<size_t>(i)] == 1) a.push_back(i);
      else if (assign[static_cast<size_t>(i)] == 2) b.push_back(i);
    }
  }

  void capture() {
    best_a.clear();
    best_b.clear();
    collect(best_a, best_b);
  }

  void run(int idx) {
    if (idx == gr.size()) {
      if (count1 > 0 && count2 > 0) consider();
      return;
    }
    // skip
    run(idx + 1);
    // V1
    double c1 = 0.0;
    for (int j = 0; j < idx; ++j)
      if (assign[static_cast<size_t>(j)] == 2)
        c1 += gr.w[static_cast<size_t>(idx)][static_cast<size_t>(j)];
    assign[static_cast<size_t>(idx)] = 1;
    cross += c1;
    vol1 += gr.mu[static_cast<size_t>(idx)];
    ++count1;
    run(idx + 1);
    cross -= c1;
    vol1 -= gr.mu[static_cast<size_t>(idx)];
    --count1;
    // V2 only once some smaller id is already in V1 (unordered dedup)
    if (count1 > 0) {
      double c2 = 0.0;
      for (int j = 0; j < idx; ++j)
        if (assign[static_cast<size_t>(j)] == 1)
          c2 += gr.w[static_cast<size_t>(idx)][static_cast<size_t>(j)];
      assign[static_cast<size_t>(idx)] = 2;
      cross += c2;
      vol2 += gr.mu[static_cast<size_t>(idx)];
      ++count2;
      run(idx + 1);
      cross -= c2;
      vol2 -= gr.mu[static_cast<size_t>(idx)];
      --count2;
    }
    assign[static_cast<size_t>(idx)] = 0;
  }
};

}  // namespace

IsoperimetricResult cheeger_exact(const WeightedGraph& ambient, const VertexSet& omega,
                                  const EnumerationCaps& caps) {
  if (omega.empty()) throw std::invalid_argument("empty omega");
  if (omega.size() > caps.cheeger)
    throw std::invalid_argument("omega exceeds the exact Cheeger enumeration cap");
  return min_boundary_ratio_exact(ambient, omega);
}

IsoperimetricResult cheeger_bound(const WeightedGraph& ambient, const VertexSet& omega) {
  IsoperimetricResult out;
  out.method = SearchMethod::Heuristic;
  double best = 2.0;
  VertexSet best_set;
  // Greedy growth from each start: repeatedly add the omega-neighbor that
  // minimizes the new boundary ratio.
  for (int start : omega) {
    std::vector<int> members{start};
    VertexSet cur(std::vector<int>{start});
    double vol = ambient.measure(start);
    double internal = ambient.loop_weight(start);
    while (true) {
      double ratio = (vol - internal) / vol;
      ++out.candidates;
      if (ratio < best - kTieTol || (ratio <= best + kTieTol && lex_less(cur, best_set))) {
        best = ratio;
        best_set = cur;
      }
      int pick = -1;
      double pick_ratio = ratio;
      double pick_gain = 0.0;
      for (int v : cur) {
        for (const auto& nb : ambient.neighbors(v)) {
          if (nb.vertex == v || !omega.contains(nb.vertex) || cur.contains(nb.vertex))
            continue;
          double gain = ambient.loop_weight(nb.vertex);
          for (const auto& nb2 : ambient.neighbors(nb.vertex))
            if (nb2.vertex != nb.vertex && cur.contains(nb2.vertex)) gain += 2.0 * nb2.weight;
          double nvol = vol + ambient.measure(nb.vertex);
          double nratio = (nvol - internal - gain) / nvol;
          if (pick < 0 || nratio < pick_ratio) {
            pick = nb.vertex;
            pick_ratio = nratio;
            pick_gain = gain;
          }
        }
      }
      if (pick < 0) break;
      cur = cur.unioned(VertexSet(std::vector<int>{pick}));
      vol += ambient.measure(pick);
      internal += pick_gain;
      if (cur.size() == omega.size()) {
        double r = (vol - internal) / vol;
        ++out.candidates;
        if (r < best - kTieTol) {
          best = r;
          best_set = cur;
        }
        break;
      }
    }
  }
  out.value = best;
  out.witness = best_set;
  return out;
}

IsoperimetricResult dual_cheeger_exact(const WeightedGraph& ambient, const VertexSet& omega,
                                       const EnumerationCaps& caps) {
  if (omega.size() < 2)
    throw std::invalid_argument("dual Cheeger constant needs at least two vertices");
  if (omega.size() > caps.dual_cheeger)
    throw std::invalid_argument("omega exceeds the exact dual Cheeger enumeration cap");
  Ground gr(ambient, omega);
  DualSearch search(gr);
  search.run(0);
  IsoperimetricResult out;
  out.value = search.best;
  out.method = SearchMethod::Exact;
  out.candidates = search.candidates;
  std::vector<int> a, b;
  for (int pos : search.best_a) a.push_back(gr.ids[static_cast<size_t>(pos)]);
  for (int pos : search.best_b) b.push_back(gr.ids[static_cast<size_t>(pos)]);
  out.pair_witness =
      PartitionPair::compute(ambient, VertexSet(std::move(a)), VertexSet(std::move(b)));
  out.witness = out.pair_witness->v1.unioned(out.pair_witness->v2);
  return out;
}

IsoperimetricResult dual_cheeger_bound(const WeightedGraph& ambient, const VertexSet& omega) {
  // Surgery split where available (loopless), alternating BFS otherwise,
  // refined by greedy single-vertex moves.
  IsoperimetricResult out;
  out.method = SearchMethod::Heuristic;
  const auto& ids = omega.ids();
  std::vector<int> side(ids.size(), 0);  // 1 or 2
  std::vector<int> pos_of(static_cast<size_t>(ambient.vertex_count()), -1);
  for (size_t i = 0; i < ids.size(); ++i) pos_of[static_cast<size_t>(ids[i])] = static_cast<int>(i);
  if (!ambient.has_loop_in(omega) && omega.size() >= 2) {
    SurgeryResult seed = surgery_partition(ambient, omega);
    for (int v : seed.partition.v1) side[static_cast<size_t>(pos_of[static_cast<size_t>(v)])] = 1;
    for (int v : seed.partition.v2) side[static_cast<size_t>(pos_of[static_cast<size_t>(v)])] = 2;
  } else {
    for (size_t i = 0; i < ids.size(); ++i) {
      if (side[i] != 0) continue;
      side[i] = 1;
      std::vector<int> stack{static_cast<int>(i)};
      while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (const auto& nb : ambient.neighbors(ids[static_cast<size_t>(p)])) {
          int q = pos_of[static_cast<size_t>(nb.vertex)];
          if (q < 0 || nb.vertex == ids[static_cast<size_t>(p)]) continue;
          if (side[static_cast<size_t>(q)] == 0) {
            side[static_cast<size_t>(q)] = 3 - side[static_cast<size_t>(p)];
            stack.push_back(q);
          }
        }
      }
    }
  }
  auto ratio_of = [&](const std::vector<int>& s) {
    std::vector<int> a, b;
    for (size_t i = 0; i < ids.size(); ++i)
      (s[i] == 1 ? a : b).push_back(ids[i]);
    if (a.empty() || b.empty()) return std::pair<double, PartitionPair>(-1.0, PartitionPair{});
    auto pp = PartitionPair::compute(ambient, VertexSet(a), VertexSet(b));
    return std::pair<double, PartitionPair>(pp.dual_ratio(), pp);
  };
  auto [value, pair] = ratio_of(side);
  bool improved = true;
  while (improved && value >= 0.0) {
    improved = false;
    for (size_t i = 0; i < ids.size(); ++i) {
      std::vector<int> flip = side;
      flip[i] = 3 - flip[i];
      auto [v2, p2] = ratio_of(flip);
      ++out.candidates;
      if (v2 > value + kTieTol) {
        side = flip;
        value = v2;
        pair = p2;
        improved = true;
      }
    }
  }
  out.value = value;
  if (value >= 0.0) {
    out.pair_witness = pair;
    out.witness = pair.v1.unioned(pair.v2);
  }
  return out;
}

AuxiliaryCheegerResult auxiliary_cheeger(const WeightedGraph& ambient, const VertexSet& omega,
                                         std::span<const double> g,
                                         const EnumerationCaps& caps) {
  if (static_cast<int>(g.size()) != omega.size())
    throw std::invalid_argument("function size must match omega");
  std::vector<int> pos;
  for (int i = 0; i < omega.size(); ++i)
    if (g[static_cast<size_t>(i)] > 0.0) pos.push_back(omega[i]);
  if (pos.empty()) throw std::invalid_argument("empty positive part");
  if (static_cast<int>(pos.size()) > caps.cheeger)
    throw std::invalid_argument("positive part exceeds the enumeration cap");
  VertexSet support(std::move(pos));
  IsoperimetricResult r = min_boundary_ratio_exact(ambient, support);
  AuxiliaryCheegerResult out;
  out.value = r.value;
  out.witness = r.witness;
  out.positive_part = support;
  return out;
}

bool CheegerPairReport::all_hold() const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [](const InequalityCheck& c) { return c.holds; });
}

CheegerPairReport verify_cheeger_pair(const WeightedGraph& ambient, const VertexSet& omega,
                                      const EnumerationCaps& caps) {
  CheegerPairReport rep;
  rep.h_result = cheeger_exact(ambient, omega, caps);
  rep.hbar_result = dual_cheeger_exact(ambient, omega, caps);
  rep.h = rep.h_result.value;
  rep.hbar = rep.hbar_result.value;
  rep.loopless = !ambient.has_loop_in(omega);

  DirichletOperator op(ambient, omega);
  SpectralResult sp = spectrum(op);
  rep.lambda1 = sp.lambda1();
  rep.lambda_max = sp.lambda_max();

  const double tol = 1e-9;
  auto push = [&](const std::string& name, double lhs, double rhs) {
    rep.inequalities.push_back({name, lhs, rhs, lhs <= rhs + tol, rhs - lhs});
  };
  push("cheeger_lower", 1.0 - std::sqrt(std::max(0.0, 1.0 - rep.h * rep.h)), rep.lambda1);
  push("cheeger_upper", rep.lambda1, rep.h);
  push("dual_lower", 2.0 * rep.hbar + rep.h, rep.lambda_max);
  push("dual_upper", rep.lambda_max,
       1.0 + std::sqrt(std::max(0.0, 1.0 - (1.0 - rep.hbar) * (1.0 - rep.hbar))));
  push("hbar_vs_h", rep.hbar, 1.0 - rep.h);
  if (rep.loopless) push("hbar_lower_loopless", 0.5 * (1.0 - rep.h), rep.hbar);
  return rep;
}

}  // namespace graphspec
