#include "graphspec/suite.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "graphspec/bipartite.hpp"
#include "graphspec/comparison.hpp"
#include "graphspec/corpus.hpp"
#include "graphspec/dirichlet.hpp"
#include "graphspec/exhaustion.hpp"
#include "graphspec/family.hpp"
#include "graphspec/finite_bounds.hpp"
#include "graphspec/halfline.hpp"
#include "graphspec/infinity.hpp"
#include "graphspec/max_cut.hpp"
#include "graphspec/metric.hpp"
#include "graphspec/spectral.hpp"
#include "graphspec/surgery.hpp"

namespace graphspec {

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool pass = true;
  double worst = 0.0;  // largest violation / deviation observed
  int cases = 0;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      note << what;
    }
  }
  void deviation(double d) { worst = std::max(worst, d); }
  void bound(double value, double limit, const std::string& what) {
    deviation(value);
    require(value <= limit, what);
  }
  std::string detail(const std::string& extra = "") const {
    std::ostringstream out;
    out.precision(3);
    out << cases << " checks, worst deviation " << worst;
    if (!extra.empty()) out << "; " << extra;
    std::string n = note.str();
    if (!n.empty()) out << "; first failure: " << n;
    return out.str();
  }
};

// ---------------------------------------------------------------- criterion 1

CriterionResult closed_form_spectra() {
  Check c;
  {
    GraphFamily path = make_infinite_path(41);
    for (int n = 2; n <= 40; ++n) {
      SpectralResult sp = spectrum(DirichletOperator(path.graph(), path.exhaustion(n)));
      for (int j = 1; j <= n; ++j) {
        double expect = 1.0 - std::cos(j * kPi / (n + 1));
        c.bound(std::abs(sp.eigenvalues[static_cast<size_t>(j - 1)] - expect), 1e-9,
                "path eigenvalue off at n=" + std::to_string(n));
      }
    }
    ExhaustionReport rep = exhaustion_limits(path, 30);
    c.bound(std::abs(rep.lambda_bottom.value - 0.0), 1e-3, "path bottom limit");
    c.bound(std::abs(rep.lambda_top.value - 2.0), 1e-3, "path top limit");
    c.require(rep.lambda1_nonincreasing && rep.lambda_max_nondecreasing, "path monotonicity");
  }
  {
    GraphFamily ladder = make_ladder(31);
    for (int n = 2; n <= 30; ++n) {
      SpectralResult sp = spectrum(DirichletOperator(ladder.graph(), ladder.exhaustion(n)));
      c.bound(std::abs(sp.lambda1() - 0.8 * (1.0 - std::cos(kPi / (n + 1)))), 1e-9,
              "ladder lambda1 at n=" + std::to_string(n));
      c.bound(std::abs(sp.lambda_max() - 0.8 * (1.0 + std::cos(kPi / (n + 1)))), 1e-9,
              "ladder lambdamax at n=" + std::to_string(n));
    }
    ExhaustionReport rep = exhaustion_limits(ladder, 30);
    c.bound(std::abs(rep.lambda_top.value - 1.6), 1e-3, "ladder top limit");
    c.bound(std::abs(rep.lambda_bottom.value - 0.0), 1e-3, "ladder bottom limit");
  }
  {
    GraphFamily prism = make_cayley_line_triangle(31);
    for (int n = 2; n <= 30; ++n) {
      SpectralResult sp = spectrum(DirichletOperator(prism.graph(), prism.exhaustion(n)));
      c.bound(std::abs(sp.lambda1() - 0.5 * (1.0 - std::cos(kPi / (n + 1)))), 1e-9,
              "line-triangle lambda1 at n=" + std::to_string(n));
      c.bound(std::abs(sp.lambda_max() - (1.25 + 0.5 * std::cos(kPi / (n + 1)))), 1e-9,
              "line-triangle lambdamax at n=" + std::to_string(n));
    }
    ExhaustionReport rep = exhaustion_limits(prism, 30);
    c.bound(std::abs(rep.lambda_top.value - 1.75), 1e-3, "line-triangle top limit");
    c.bound(std::abs(rep.lambda_bottom.value - 0.0), 1e-3, "line-triangle bottom limit");
  }
  return {1, "closed-form spectra of the three product families", c.pass, c.detail()};
}

// ---------------------------------------------------------------- criterion 2

CriterionResult halfline_model_checks() {
  Check c;
  for (int r = 1; r <= 50; ++r)
    c.bound(std::abs(halfline_theta(2.0, r) - kPi / (2.0 * (r + 1))), 1e-12,
            "analytic theta at l=2, r=" + std::to_string(r));
  for (double l : {2.1, 2.5, 3.0, 4.0, 6.0}) {
    const double eta = 2.0 * (l - 1.0) / (l - 2.0);
    const double amp = 2.0 * std::sqrt(l - 1.0) / l;
    for (int r = 1; r <= 20; ++r) {
      HalfLineModel m = HalfLineModel::solve(l, r);
      double lo = std::max(kPi / (r + eta), kPi / (2.0 * (r + 1)));
      double hi = kPi / (r + 1);
      c.require(m.theta >= lo - 1e-12 && m.theta <= hi + 1e-12,
                "theta bracket at l=" + std::to_string(l) + " r=" + std::to_string(r));
      // four closed-form bounds on the model eigenvalues
      c.require(m.lambda1 >= 1.0 - amp * std::cos(kPi / (r + eta)) - 1e-12 &&
                    m.lambda1 <= 1.0 - amp * std::cos(kPi / (r + 1)) + 1e-12 &&
                    m.lambda_max >= 1.0 + amp * std::cos(kPi / (r + 1)) - 1e-12 &&
                    m.lambda_max <= 1.0 + amp * std::cos(kPi / (r + eta)) + 1e-12,
                "eigenvalue bounds at l=" + std::to_string(l) + " r=" + std::to_string(r));
      // the explicit geometric path reproduces the closed form
      WeightedGraph g = halfline_graph(l, r + 1);
      SpectralResult sp = spectrum(DirichletOperator(g, VertexSet::range(0, r + 1)));
      c.bound(std::abs(sp.lambda1() - m.lambda1), 1e-9, "model spectrum mismatch");
      c.bound(std::abs(sp.lambda_max() - m.lambda_max), 1e-9, "model top mismatch");
      // ground state positive decreasing; top alternates with shrinking modulus
      for (int s = 0; s + 1 <= r; ++s) {
        c.require(m.f1[static_cast<size_t>(s)] > 0.0 &&
                      m.f1[static_cast<size_t>(s)] > m.f1[static_cast<size_t>(s + 1)],
                  "ground state profile");
        c.require(std::abs(m.fmax[static_cast<size_t>(s)]) >
                      std::abs(m.fmax[static_cast<size_t>(s + 1)]),
                  "top profile modulus");
        if (s + 1 < r - 1)
          c.require(m.fmax[static_cast<size_t>(s)] * m.fmax[static_cast<size_t>(s + 1)] < 0.0,
                    "top profile signs");
      }
      c.bound(std::abs(m.lambda1 + m.lambda_max - 2.0), 1e-12, "model symmetry");
    }
  }
  return {2, "half-line model roots, brackets and explicit spectra", c.pass, c.detail()};
}

// ---------------------------------------------------------------- criterion 3

CriterionResult bipartite_characterization(Rng& rng) {
  Check c;
  for (int i = 0; i < 500; ++i) {
    const bool bip = (i % 2 == 0);
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 12;
    spec.force_bipartite = bip;
    spec.force_odd_cycle = !bip;
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega;
    if (bip) {
      int size = std::max(2, g.vertex_count() - rng.below(4));
      omega = random_connected_subset(rng, g, size);
    } else if (i % 4 == 1) {
      // window around an odd circuit, kept proper when the graph allows
      OddGirth og = odd_girth(g, g.all_vertices());
      omega = VertexSet(og.witness);
      for (int v : og.witness) {
        for (const auto& nb : g.neighbors(v)) {
          if (omega.size() >= g.vertex_count() - 1) break;
          if (nb.vertex != v) omega = omega.unioned(VertexSet(std::vector<int>{nb.vertex}));
        }
      }
    } else {
      omega = g.all_vertices();
    }
    SpectralResult sp = spectrum(DirichletOperator(g, omega));
    double sum = sp.lambda1() + sp.lambda_max();
    if (bip) {
      c.bound(std::abs(sum - 2.0), 1e-9, "bipartite sum rule at case " + std::to_string(i));
      const int n = sp.size();
      for (int j = 0; j < n; ++j)
        c.bound(std::abs(sp.eigenvalues[static_cast<size_t>(j)] +
                         sp.eigenvalues[static_cast<size_t>(n - 1 - j)] - 2.0),
                1e-9, "bipartite spectrum symmetry at case " + std::to_string(i));
    } else {
      c.require(sum < 2.0 - 1e-8, "non-bipartite margin at case " + std::to_string(i));
    }
  }
  return {3, "top-plus-bottom equals 2 exactly on bipartite sets", c.pass, c.detail()};
}

// ---------------------------------------------------------------- criterion 4

CriterionResult isoperimetric_inequalities(Rng& rng, const EnumerationCaps& caps) {
  Check c;
  double min_margin = 2.0;
  for (int i = 0; i < 300; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 6;
    spec.max_vertices = 16;
    spec.allow_loops = (i % 3 == 0);
    WeightedGraph g = random_connected_graph(rng, spec);
    int size = 3 + rng.below(10);  // up to 12
    size = std::min(size, g.vertex_count());
    VertexSet omega = random_connected_subset(rng, g, size);
    if (omega.size() < 2) continue;
    CheegerPairReport rep = verify_cheeger_pair(g, omega, caps);
    for (const auto& q : rep.inequalities) {
      c.require(q.holds, q.name + " violated at case " + std::to_string(i));
      min_margin = std::min(min_margin, q.margin);
    }
  }
  std::ostringstream extra;
  extra.precision(6);
  extra << "minimum margin " << min_margin;
  return {4, "two-sided isoperimetric inequalities on a random corpus", c.pass,
          c.detail(extra.str())};
}

// ---------------------------------------------------------------- criterion 5

CriterionResult bipartite_block_instance(const EnumerationCaps& caps) {
  Check c;
  GraphFamily fam = make_lattice_with_bipartite_block(3, 3, 5);
  VertexSet omega = fam.named_sets().at("example_omega");
  IsoperimetricResult h = cheeger_exact(fam.graph(), omega, caps);
  IsoperimetricResult hbar = dual_cheeger_exact(fam.graph(), omega, caps);
  c.bound(std::abs(h.value + hbar.value - 1.0), 1e-12, "h + hbar != 1");
  c.bound(std::abs(h.value - 1.0 / 19.0), 1e-12, "h != 1/19");
  c.bound(std::abs(hbar.value - 18.0 / 19.0), 1e-12, "hbar != 18/19");
  c.require(odd_girth(fam.graph(), omega).is_finite(), "instance should not be bipartite");
  c.require(hbar.pair_witness.has_value() && hbar.pair_witness->internal1 == 0.0 &&
                hbar.pair_witness->internal2 == 0.0,
            "optimal pair must have no internal edges");
  c.require(h.witness == fam.named_sets().at("block"), "h witness should be the block");
  return {5, "equality instance: lattice patch joined to a bipartite block", c.pass, c.detail()};
}

// ---------------------------------------------------------------- criterion 6

CriterionResult surgery_partitions(Rng& rng) {
  Check c;
  for (int i = 0; i < 1000; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 3;
    spec.max_vertices = 12;
    WeightedGraph g = random_connected_graph(rng, spec);
    SurgeryResult res = surgery_partition(g, g.all_vertices());
    const PartitionPair& p = res.partition;
    c.require(p.cross >= std::max(p.internal1, p.internal2) - 1e-12,
              "surgery inequality violated at case " + std::to_string(i));
    // integer weights: every move gains at least 1, so the cross weight caps
    // the move count by the total edge weight
    c.require(res.moves <= static_cast<int>(g.total_edge_weight()) + 1,
              "move count exceeded the weight budget at case " + std::to_string(i));
  }
  return {6, "surgery split dominates both internal cuts", c.pass, c.detail()};
}

// ---------------------------------------------------------------- criterion 7

CriterionResult interlacing_pairs(Rng& rng) {
  Check c;
  for (int i = 0; i < 200; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 6;
    spec.max_vertices = 14;
    WeightedGraph g = random_connected_graph(rng, spec);
    int size1 = std::min(g.vertex_count(), 4 + rng.below(9));
    VertexSet omega1 = random_connected_subset(rng, g, size1);
    if (omega1.size() < 2) continue;
    // arbitrary nonempty proper subset
    int size2 = 1 + rng.below(omega1.size() - 1);
    std::vector<int> picked;
    std::vector<int> pool = omega1.ids();
    for (int t = 0; t < size2; ++t) {
      int idx = rng.below(static_cast<int>(pool.size()));
      picked.push_back(pool[static_cast<size_t>(idx)]);
      pool.erase(pool.begin() + idx);
    }
    VertexSet omega2(std::move(picked));
    SpectralResult s1 = spectrum(DirichletOperator(g, omega1));
    SpectralResult s2 = spectrum(DirichletOperator(g, omega2));
    const int r = omega1.size() - omega2.size();
    for (int k = 1; k <= omega2.size(); ++k) {
      double big_k = s1.eigenvalues[static_cast<size_t>(k - 1)];
      double small_k = s2.eigenvalues[static_cast<size_t>(k - 1)];
      double big_kr = s1.eigenvalues[static_cast<size_t>(k + r - 1)];
      c.require(big_k <= small_k + 1e-9 && small_k <= big_kr + 1e-9,
                "interlacing violated at case " + std::to_string(i));
      c.deviation(std::max(big_k - small_k, small_k - big_kr));
    }
  }
  return {7, "nested-set eigenvalue interlacing", c.pass, c.detail()};
}

// ---------------------------------------------------------------- criterion 8

CriterionResult comparison_theorems(const EnumerationCaps& caps) {
  Check c;
  auto run_family = [&](const GraphFamily& fam, int r_lo, int r_hi, const std::string& tag) {
    for (int r = r_lo; r <= r_hi; ++r) {
      ComparisonReport rep = comparison_bounds(fam.graph(), fam.base_vertex(), r, caps);
      c.require(rep.actual_lambda_max.has_value(), tag + ": spectrum missing");
      for (const auto& b : rep.bounds) {
        c.require(b.holds, tag + ": bound " + b.name + " violated at r=" + std::to_string(r));
        if (b.actual)
          c.deviation(b.kind == "lower" ? b.bound - *b.actual : *b.actual - b.bound);
      }
      c.require(rep.clustering_exact, tag + ": clustering enumeration capped");
      c.require(rep.kappa_value <= rep.clustering_value + 1e-12,
                tag + ": kappa exceeds the clustering value at r=" + std::to_string(r));
    }
  };
  run_family(make_homogeneous_tree(3, 6), 1, 5, "tree");
  run_family(make_infinite_path(10), 1, 8, "path");
  run_family(make_cayley_line_triangle(9), 1, 4, "line-triangle");

  // pinned closed-form case: unit path ball of radius 5
  GraphFamily path = make_infinite_path(7);
  ComparisonReport rep = comparison_bounds(path.graph(), path.base_vertex(), 5, caps);
  bool found = false;
  for (const auto& b : rep.bounds)
    if (b.name == "closed_sup_lambda_max_lower") {
      found = true;
      c.bound(std::abs(b.bound - (1.0 + std::cos(kPi / 12.0))), 1e-12,
              "path closed-form bound value");
    }
  c.require(found, "closed-form bound missing on the path ball");
  return {8, "half-line comparison bounds hold on tree, path and product balls", c.pass,
          c.detail()};
}

// ---------------------------------------------------------------- criterion 9

CriterionResult finite_graph_theta_bounds() {
  Check c;
  std::vector<std::pair<std::string, WeightedGraph>> corpus;
  corpus.emplace_back("hypercube3", hypercube_graph(3));
  corpus.emplace_back("hypercube4", hypercube_graph(4));
  corpus.emplace_back("chorded8", chorded_cycle(8, {{0, 3}}));
  corpus.emplace_back("chorded10", chorded_cycle(10, {{0, 3}, {5, 8}}));
  corpus.emplace_back("chorded12", chorded_cycle(12, {{0, 5}, {3, 8}}));
  for (const auto& [name, g] : corpus) {
    SpectralResult sp = spectrum(DirichletOperator(g, g.all_vertices()));
    const int n = g.vertex_count();
    const int diam = g.diameter();
    for (int m = 1; 2 * m <= diam; ++m) {
      FiniteGraphBounds fb = finite_graph_bounds(g, m);
      c.require(fb.balls_edge_disjoint, name + ": balls not edge-disjoint at m=" +
                                            std::to_string(m));
      // theta indices are 0-based, so theta_{N-m} is the m-th from the top
      double theta_top = sp.eigenvalues[static_cast<size_t>(n - m)];
      double theta_low = sp.eigenvalues[static_cast<size_t>(m)];
      c.require(theta_top >= fb.theta_top_lower - 1e-9,
                name + ": top bound violated at m=" + std::to_string(m));
      c.require(theta_low <= fb.theta_low_upper + 1e-9,
                name + ": low bound violated at m=" + std::to_string(m));
      c.deviation(fb.theta_top_lower - theta_top);
      c.deviation(theta_low - fb.theta_low_upper);
      // loopless corpus: the two bounds reflect through 1
      c.bound(std::abs(fb.theta_top_lower + 2.0 * fb.kappa_g + fb.theta_low_upper - 2.0),
              1e-12, name + ": bounds do not reflect");
    }
  }
  return {9, "edge-disjoint ball bounds on ordinary spectra", c.pass, c.detail()};
}

// --------------------------------------------------------------- criterion 10

CriterionResult max_cut_checks(Rng& rng, const EnumerationCaps& caps) {
  Check c;
  c.require(max_cut_exact(cycle_graph(5), caps).value == 4.0, "five-cycle max cut");
  c.require(max_cut_exact(petersen_graph(), caps).value == 12.0, "petersen max cut");

  // bipartite corpus: the full edge weight is achievable
  std::vector<WeightedGraph> bip;
  bip.push_back(complete_bipartite_graph(2, 3));
  bip.push_back(complete_bipartite_graph(3, 3));
  bip.push_back(hypercube_graph(3));
  bip.push_back(cycle_graph(6));
  bip.push_back(cycle_graph(8));
  for (int i = 0; i < 5; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 12;
    spec.force_bipartite = true;
    bip.push_back(random_connected_graph(rng, spec));
  }
  for (const auto& g : bip)
    c.bound(std::abs(max_cut_exact(g, caps).value - g.total_edge_weight()), 1e-12,
            "bipartite max cut must meet the total weight");

  // non-bipartite corpus against the exact-ball bound
  std::vector<WeightedGraph> odd;
  odd.push_back(cycle_graph(5));
  odd.push_back(cycle_graph(7));
  odd.push_back(cycle_graph(9));
  odd.push_back(petersen_graph());
  odd.push_back(complete_graph(4));
  odd.push_back(complete_graph(5));
  for (const auto& g : odd) {
    OddGirth og = odd_girth(g, g.all_vertices());
    c.require(og.is_finite(), "corpus member unexpectedly bipartite");
    const int s = (*og.length - 1) / 2;
    long long ball_count = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      ball_count = std::max(ball_count, static_cast<long long>(ball(g, v, s).size()));
    MaxCutBound bound = (*og.length == 3)
                            ? max_cut_bound(g.max_degree(), 3, g.total_edge_weight())
                            : max_cut_bound_exact_ball(g.max_degree(), *og.length,
                                                       g.total_edge_weight(), ball_count);
    double mc = max_cut_exact(g, caps).value;
    c.require(mc <= bound.bound + 1e-9, "cut bound violated");
    c.deviation(mc - bound.bound);
  }
  // pinned five-cycle variant: ball of radius 2 has 5 vertices
  MaxCutBound pinned = max_cut_bound_exact_ball(2, 5, 5.0, 5);
  c.bound(std::abs(pinned.delta - 0.1), 1e-15, "five-cycle delta");
  c.bound(std::abs(pinned.bound - 4.5), 1e-12, "five-cycle bound");
  return {10, "exact maximum cuts against the circuit-counting bound", c.pass, c.detail()};
}

// --------------------------------------------------------------- criterion 11

CriterionResult trace_bounds() {
  Check c;
  GraphFamily chain = make_selfloop_chain(20);
  for (int deleted = 1; deleted <= 8; ++deleted)
    for (int size = 2; size <= 10; ++size) {
      VertexSet omega = VertexSet::range(deleted + 1, deleted + 1 + size);
      TraceBoundReport rep = trace_bound_check(chain, deleted, omega);
      c.require(rep.holds, "trace chain violated at K=" + std::to_string(deleted) +
                               " size=" + std::to_string(size));
      c.require(rep.lambda_max <= rep.tail_bound + 1e-9, "tail bound violated");
      c.deviation(rep.lambda_max - rep.tail_bound);
    }
  return {11, "self-loop chain trace bound", c.pass, c.detail()};
}

// --------------------------------------------------------------- criterion 12

CriterionResult at_infinity_behavior(const EnumerationCaps& caps) {
  Check c;
  {
    GraphFamily tree = make_rapidly_branching_tree(8);
    InfinityConstants inf = infinity_constants(tree, 6, caps);
    for (size_t i = 1; i < inf.probes.size(); ++i)
      c.require(inf.probes[i].hbar_lower < inf.probes[i - 1].hbar_lower + 1e-12,
                "probe sequence not decreasing at k=" + std::to_string(i));
    c.require(inf.probes.back().hbar_lower < 0.3, "probe at k=6 not below 0.3");
    c.require(inf.concentration_verdict == "consistent", "concentration verdict");
    c.deviation(inf.probes.back().hbar_lower);
  }
  {
    // probe-level equality hbar = 1 - h on bipartite families
    for (const GraphFamily& fam :
         {make_infinite_path(12), make_homogeneous_tree(3, 6), make_halfline_family(2.0, 12)}) {
      InfinityConstants inf = infinity_constants(fam, 3, caps);
      for (const auto& p : inf.probes)
        c.bound(std::abs(p.hbar_lower - (1.0 - p.h_upper)), 1e-12,
                fam.name() + ": probe equality fails at k=" + std::to_string(p.k));
    }
  }
  {
    // looped chain: both probes decay toward zero
    GraphFamily chain = make_selfloop_chain(12);
    InfinityConstants inf = infinity_constants(chain, 6, caps);
    c.require(inf.probes.back().h_upper < 0.05, "chain h probe too large");
    c.require(inf.probes.back().hbar_lower < 0.05, "chain hbar probe too large");
  }
  {
    // sidedness: certified bounds survive higher-resolution recomputation
    GraphFamily path = make_infinite_path(14);
    ExhaustionReport rep = exhaustion_limits(path, 12, caps);
    SpectralResult big = spectrum(DirichletOperator(path.graph(), path.exhaustion(12)));
    double h12 = cheeger_exact(path.graph(), path.exhaustion(12), caps).value;
    for (const auto& row : rep.rows) {
      if (row.h) c.require(big.lambda1() <= *row.h + 1e-9, "certified h upper bound violated");
      if (row.hbar)
        c.require(big.lambda_max() >= 2.0 * *row.hbar + h12 - 1e-9,
                  "certified hbar lower bound violated");
    }
    // enlarging a probe can only sharpen its one-sided bounds
    GraphFamily tree = make_homogeneous_tree(3, 7);
    InfinityConstants small = infinity_constants(tree, 3, caps);
    for (const auto& p : small.probes) {
      VertexSet wide = p.probe;
      for (int v : p.probe) {
        for (const auto& nb : tree.graph().neighbors(v)) {
          VertexSet cand = wide.unioned(VertexSet(std::vector<int>{nb.vertex}));
          if (static_cast<int>(cand.size()) > caps.dual_cheeger) break;
          auto dist = tree.graph().distances_from(tree.base_vertex());
          if (dist[static_cast<size_t>(nb.vertex)] > p.k && tree.is_safe(cand)) wide = cand;
        }
      }
      double h_wide = cheeger_exact(tree.graph(), wide, caps).value;
      double hbar_wide = dual_cheeger_exact(tree.graph(), wide, caps).value;
      c.require(h_wide <= p.h_upper + 1e-12, "wider probe weakened the h bound");
      c.require(hbar_wide >= p.hbar_lower - 1e-12, "wider probe weakened the hbar bound");
    }
  }
  return {12, "deleted-ball probes and sidedness discipline", c.pass, c.detail()};
}

// ----------------------------------------------------------------------------

std::vector<CriterionResult> run_once(std::uint64_t seed, const EnumerationCaps& caps) {
  std::vector<CriterionResult> results;
  results.push_back(closed_form_spectra());
  results.push_back(halfline_model_checks());
  {
    Rng rng(seed);
    results.push_back(bipartite_characterization(rng));
  }
  {
    Rng rng(seed + 1);
    results.push_back(isoperimetric_inequalities(rng, caps));
  }
  results.push_back(bipartite_block_instance(caps));
  {
    Rng rng(seed + 2);
    results.push_back(surgery_partitions(rng));
  }
  {
    Rng rng(seed + 3);
    results.push_back(interlacing_pairs(rng));
  }
  results.push_back(comparison_theorems(caps));
  results.push_back(finite_graph_theta_bounds());
  {
    Rng rng(seed + 4);
    results.push_back(max_cut_checks(rng, caps));
  }
  results.push_back(trace_bounds());
  results.push_back(at_infinity_behavior(caps));
  return results;
}

Json criteria_to_json(const std::vector<CriterionResult>& criteria) {
  Json arr = Json::array();
  for (const auto& cr : criteria)
    arr.push_back(Json{{"id", cr.id}, {"name", cr.name}, {"pass", cr.pass},
                       {"detail", cr.detail}});
  return arr;
}

}  // namespace

SuiteReport run_verification_suite(std::uint64_t seed, const EnumerationCaps& caps,
                                   bool check_determinism) {
  SuiteReport report;
  report.seed = seed;
  report.caps = caps;
  report.criteria = run_once(seed, caps);

  if (check_determinism) {
    std::string first = criteria_to_json(report.criteria).dump();
    std::string second = criteria_to_json(run_once(seed, caps)).dump();
    report.criteria.push_back({13, "seeded rerun produces a byte-identical report",
                               first == second,
                               first == second ? "reports match" : "reports differ"});
  }

  report.all_pass = true;
  for (const auto& cr : report.criteria)
    if (!cr.pass) report.all_pass = false;
  return report;
}

Json to_json(const SuiteReport& report) {
  return Json{{"seed", report.seed},
              {"caps",
               Json{{"cheeger", report.caps.cheeger},
                    {"dual_cheeger", report.caps.dual_cheeger},
                    {"max_cut", report.caps.max_cut},
                    {"eigensolver", report.caps.eigensolver}}},
              {"criteria", criteria_to_json(report.criteria)},
              {"all_pass", report.all_pass}};
}

}  // namespace graphspec
