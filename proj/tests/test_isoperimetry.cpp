#include "doctest.h"

#include <cmath>
#include <numbers>

#include "graphspec/bipartite.hpp"
#include "graphspec/corpus.hpp"
#include "graphspec/dirichlet.hpp"
#include "graphspec/family.hpp"
#include "graphspec/isoperimetry.hpp"
#include "graphspec/max_cut.hpp"
#include "graphspec/spectral.hpp"
#include "graphspec/surgery.hpp"
#include "oracles.hpp"

using namespace graphspec;

TEST_CASE("exact Cheeger constant of a path window") {
  GraphFamily path = make_infinite_path(6);
  VertexSet omega = path.exhaustion(3);
  IsoperimetricResult r = cheeger_exact(path.graph(), omega);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r.witness == omega);
  CHECK(r.method == SearchMethod::Exact);
  CHECK(r.candidates == 7);
}

TEST_CASE("exact constants against the mask-enumeration oracle") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 12;
    spec.allow_loops = (i % 3 == 0);
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, 2 + rng.below(std::min(8, g.vertex_count() - 1)));
    CHECK(cheeger_exact(g, omega).value ==
          doctest::Approx(oracle::cheeger(g, omega.ids())).epsilon(1e-12));
    CHECK(dual_cheeger_exact(g, omega).value ==
          doctest::Approx(oracle::dual_cheeger(g, omega.ids())).epsilon(1e-12));
  }
}

TEST_CASE("witnesses reproduce their values and break ties low") {
  Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 10;
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, std::min(g.vertex_count(), 3 + rng.below(5)));
    IsoperimetricResult h = cheeger_exact(g, omega);
    CHECK(boundary_measure(g, h.witness) / volume(g, h.witness) ==
          doctest::Approx(h.value).epsilon(1e-12));
    IsoperimetricResult hb = dual_cheeger_exact(g, omega);
    REQUIRE(hb.pair_witness.has_value());
    CHECK(hb.pair_witness->dual_ratio() == doctest::Approx(hb.value).epsilon(1e-12));
    // dedup convention: the first side holds the smallest participating id
    CHECK(hb.pair_witness->v1[0] < hb.pair_witness->v2[0]);
  }
}

TEST_CASE("the optimum is never a loopless singleton on connected windows") {
  Rng rng(33);
  for (int i = 0; i < 40; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 10;
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, std::min(g.vertex_count(), 2 + rng.below(6)));
    IsoperimetricResult h = cheeger_exact(g, omega);
    CHECK(h.witness.size() >= 2);
    CHECK(h.value < 1.0);
  }
}

TEST_CASE("dual constant of a path window with its bipartite witness") {
  GraphFamily path = make_infinite_path(6);
  VertexSet omega = path.exhaustion(3);
  IsoperimetricResult r = dual_cheeger_exact(path.graph(), omega);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  REQUIRE(r.pair_witness.has_value());
  CHECK(r.pair_witness->v1 == VertexSet({path.id_of("0"), path.id_of("2")}));
  CHECK(r.pair_witness->v2 == VertexSet({path.id_of("1")}));
  // bipartite window: the two constants are complementary
  double h = cheeger_exact(path.graph(), omega).value;
  CHECK(r.value == doctest::Approx(1.0 - h).epsilon(1e-12));
}

TEST_CASE("size caps and degenerate windows are rejected") {
  WeightedGraph g = complete_graph(16);
  EnumerationCaps caps;
  caps.cheeger = 10;
  caps.dual_cheeger = 8;
  CHECK_THROWS_AS(cheeger_exact(g, g.all_vertices(), caps), std::invalid_argument);
  CHECK_THROWS_AS(dual_cheeger_exact(g, g.all_vertices(), caps), std::invalid_argument);
  CHECK_THROWS_AS(dual_cheeger_exact(g, VertexSet({0})), std::invalid_argument);
}

TEST_CASE("heuristic variants return flagged one-sided bounds") {
  Rng rng(34);
  for (int i = 0; i < 20; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 6;
    spec.max_vertices = 12;
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, std::min(g.vertex_count(), 5 + rng.below(5)));
    double exact_h = cheeger_exact(g, omega).value;
    double exact_hb = dual_cheeger_exact(g, omega).value;
    IsoperimetricResult bh = cheeger_bound(g, omega);
    IsoperimetricResult bd = dual_cheeger_bound(g, omega);
    CHECK(bh.method == SearchMethod::Heuristic);
    CHECK(bd.method == SearchMethod::Heuristic);
    CHECK(bh.value >= exact_h - 1e-12);   // upper bound on the minimum
    CHECK(bd.value <= exact_hb + 1e-12);  // lower bound on the maximum
  }
}

TEST_CASE("nested monotonicity of the two constants") {
  Rng rng(35);
  for (int i = 0; i < 30; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 6;
    spec.max_vertices = 12;
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet small = random_connected_subset(rng, g, 3);
    VertexSet big = small;
    while (big.size() < std::min(9, g.vertex_count())) {
      bool grown = false;
      for (int v : big) {
        for (const auto& nb : g.neighbors(v))
          if (nb.vertex != v && !big.contains(nb.vertex)) {
            big = big.unioned(VertexSet({nb.vertex}));
            grown = true;
            break;
          }
        if (grown) break;
      }
      if (!grown) break;
    }
    CHECK(cheeger_exact(g, small).value >= cheeger_exact(g, big).value - 1e-12);
    if (small.size() >= 2)
      CHECK(dual_cheeger_exact(g, small).value <= dual_cheeger_exact(g, big).value + 1e-12);
  }
}

TEST_CASE("auxiliary constant over the positive support") {
  GraphFamily path = make_infinite_path(8);
  VertexSet omega = path.exhaustion(5);
  DirichletOperator op(path.graph(), omega);

  // strictly positive g searches the whole window
  std::vector<double> ones(static_cast<size_t>(omega.size()), 1.0);
  AuxiliaryCheegerResult aux = auxiliary_cheeger(path.graph(), omega, ones);
  CHECK(aux.value == doctest::Approx(cheeger_exact(path.graph(), omega).value).epsilon(1e-12));

  // a single positive loopless vertex gives ratio one
  std::vector<double> spike(static_cast<size_t>(omega.size()), -1.0);
  spike[2] = 1.0;
  CHECK(auxiliary_cheeger(path.graph(), omega, spike).value == doctest::Approx(1.0));

  std::vector<double> nowhere(static_cast<size_t>(omega.size()), -1.0);
  CHECK_THROWS_AS(auxiliary_cheeger(path.graph(), omega, nowhere), std::invalid_argument);

  // the ground state brackets its own quotient through the auxiliary constant
  SpectralResult sp = spectrum(op);
  auto f1 = sp.eigenvector(0);
  if (f1[0] < 0.0)
    for (auto& x : f1) x = -x;
  AuxiliaryCheegerResult hg = auxiliary_cheeger(path.graph(), omega, f1);
  double w = rayleigh(op, f1);
  CHECK(hg.value >= cheeger_exact(path.graph(), omega).value - 1e-12);
  CHECK(w >= 1.0 - std::sqrt(1.0 - hg.value * hg.value) - 1e-9);
  CHECK(w <= 1.0 + std::sqrt(1.0 - hg.value * hg.value) + 1e-9);
}

TEST_CASE("surgery on the triangle and on bipartite sets") {
  WeightedGraph tri = cycle_graph(3);
  SurgeryResult res = surgery_partition(tri, tri.all_vertices());
  CHECK(res.partition.cross >= std::max(res.partition.internal1, res.partition.internal2));
  CHECK(res.partition.cross == 2.0);

  // on a bipartite set the two-coloring itself satisfies the inequality
  WeightedGraph c6 = cycle_graph(6);
  auto bip = bipartition(c6, c6.all_vertices());
  REQUIRE(bip.has_value());
  PartitionPair p = PartitionPair::compute(c6, bip->first, bip->second);
  CHECK(p.internal1 == 0.0);
  CHECK(p.internal2 == 0.0);
  CHECK(p.cross >= std::max(p.internal1, p.internal2));

  WeightedGraph looped(2, {{0, 1, 1.0}, {0, 0, 1.0}});
  CHECK_THROWS_AS(surgery_partition(looped, looped.all_vertices()), std::invalid_argument);
  CHECK_THROWS_AS(surgery_partition(tri, VertexSet({0})), std::invalid_argument);
}

TEST_CASE("surgery output revalidated by direct cut measures") {
  Rng rng(36);
  for (int i = 0; i < 50; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 3;
    spec.max_vertices = 12;
    WeightedGraph g = random_connected_graph(rng, spec);
    SurgeryResult res = surgery_partition(g, g.all_vertices());
    double cross = oracle::cut(g, res.partition.v1.ids(), res.partition.v2.ids());
    double i1 = oracle::cut(g, res.partition.v1.ids(), res.partition.v1.ids());
    double i2 = oracle::cut(g, res.partition.v2.ids(), res.partition.v2.ids());
    CHECK(cross >= std::max(i1, i2) - 1e-12);
  }
}

TEST_CASE("exact maximum cuts") {
  EnumerationCaps caps;
  CHECK(max_cut_exact(cycle_graph(5), caps).value == 4.0);
  CHECK(max_cut_exact(cycle_graph(5), caps).value == doctest::Approx(oracle::max_cut(cycle_graph(5))));
  CHECK(max_cut_exact(petersen_graph(), caps).value == 12.0);

  Rng rng(37);
  for (int i = 0; i < 25; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 3;
    spec.max_vertices = 10;
    spec.allow_loops = (i % 4 == 0);  // loops never cross
    WeightedGraph g = random_connected_graph(rng, spec);
    MaxCutResult mc = max_cut_exact(g, caps);
    CHECK(mc.value == doctest::Approx(oracle::max_cut(g)).epsilon(1e-12));
    CHECK(mc.partition.cross == doctest::Approx(mc.value).epsilon(1e-12));
  }

  // bipartite graphs realize the whole weight
  WeightedGraph kb = complete_bipartite_graph(3, 4);
  CHECK(max_cut_exact(kb, caps).value == kb.total_edge_weight());

  caps.max_cut = 8;
  CHECK_THROWS_AS(max_cut_exact(petersen_graph(), caps), std::invalid_argument);
}

TEST_CASE("cut bound formulas") {
  MaxCutBound b = max_cut_bound(4, 3, 100.0);
  CHECK(b.delta == doctest::Approx(2.0 / (3.0 * 4.0 * 3.0)));
  CHECK(b.bound == doctest::Approx(100.0 * (1.0 - 1.0 / 18.0)));

  // the stated constant degenerates for the five-cycle parameters
  CHECK_THROWS_AS(max_cut_bound(2, 5, 5.0), std::invalid_argument);
  // the exact-ball variant stays meaningful
  MaxCutBound eb = max_cut_bound_exact_ball(2, 5, 5.0, 5);
  CHECK(eb.delta == doctest::Approx(0.1));
  CHECK(eb.bound == doctest::Approx(4.5));
  CHECK(max_cut_exact(cycle_graph(5)).value <= eb.bound);

  CHECK_THROWS_AS(max_cut_bound(4, 4, 10.0), std::invalid_argument);  // even girth
  CHECK_THROWS_AS(max_cut_bound(1, 3, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(max_cut_bound(4, 3, 0.0), std::invalid_argument);
}

TEST_CASE("inequality report on a path window") {
  GraphFamily path = make_infinite_path(8);
  CheegerPairReport rep = verify_cheeger_pair(path.graph(), path.exhaustion(5));
  CHECK(rep.h == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(rep.lambda1 == doctest::Approx(1.0 - std::cos(std::numbers::pi / 6.0)).epsilon(1e-9));
  CHECK(rep.all_hold());
  // the explicit numbers behind the two-sided bracket
  CHECK(1.0 - std::sqrt(1.0 - 0.04) <= rep.lambda1);
  CHECK(rep.lambda1 <= 0.2);
  CHECK(rep.loopless);
}

TEST_CASE("two-vertex looped window drives the dual constant to zero") {
  for (double w : {1.0, 10.0, 100.0}) {
    WeightedGraph g(2, {{0, 1, 1.0}, {0, 0, w}});
    IsoperimetricResult hb = dual_cheeger_exact(g, g.all_vertices());
    CHECK(hb.value == doctest::Approx(2.0 / (w + 2.0)).epsilon(1e-12));
    // sharp lower bound from the lightest edge over the window volume
    double min_edge = 1.0;
    CHECK(hb.value >= 2.0 * min_edge / volume(g, g.all_vertices()) - 1e-12);
  }
}

TEST_CASE("complementary equality forces bipartite witnesses") {
  Rng rng(38);
  for (int i = 0; i < 30; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 10;
    spec.force_bipartite = true;
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, std::min(g.vertex_count(), 3 + rng.below(6)));
    double h = cheeger_exact(g, omega).value;
    IsoperimetricResult hb = dual_cheeger_exact(g, omega);
    CHECK(hb.value == doctest::Approx(1.0 - h).epsilon(1e-9));
    REQUIRE(hb.pair_witness.has_value());
    CHECK(hb.pair_witness->internal1 == 0.0);
    CHECK(hb.pair_witness->internal2 == 0.0);
  }
}

TEST_CASE("constants stay in their ranges on windows of infinite families") {
  for (const GraphFamily& fam :
       {make_infinite_path(8), make_homogeneous_tree(3, 5), make_cayley_line_triangle(7)}) {
    for (int n = 1; n <= 2; ++n) {
      VertexSet omega = fam.exhaustion(n);
      if (omega.size() < 2) continue;
      double h = cheeger_exact(fam.graph(), omega).value;
      double hb = dual_cheeger_exact(fam.graph(), omega).value;
      CHECK(h > 0.0);
      CHECK(h <= 1.0);
      CHECK(hb >= 0.0);
      CHECK(hb < 1.0);
    }
  }
}

TEST_CASE("ties break toward the lexicographically smallest witness") {
  // two disjoint edges: several optima tie, the smallest ids win
  WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  MaxCutResult mc = max_cut_exact(g);
  CHECK(mc.value == 2.0);
  CHECK(mc.partition.v1 == VertexSet({0, 2}));
  CHECK(mc.partition.v2 == VertexSet({1, 3}));

  // a disconnected window is accepted; the optimum sits in one component
  IsoperimetricResult hb = dual_cheeger_exact(g, g.all_vertices());
  CHECK(hb.value == doctest::Approx(1.0));
  REQUIRE(hb.pair_witness.has_value());
  CHECK(hb.pair_witness->v1 == VertexSet({0}));
  CHECK(hb.pair_witness->v2 == VertexSet({1}));
}
