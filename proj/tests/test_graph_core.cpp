#include "doctest.h"

#include <cmath>

#include "graphspec/bipartite.hpp"
#include "graphspec/corpus.hpp"
#include "graphspec/family.hpp"
#include "graphspec/metric.hpp"
#include "graphspec/serialize.hpp"
#include "graphspec/weighted_graph.hpp"
#include "oracles.hpp"

using namespace graphspec;

TEST_CASE("volume counts ambient measures, loops once") {
  GraphFamily path = make_infinite_path(5);
  CHECK(volume(path.graph(), VertexSet({path.id_of("0")})) == 2.0);
  CHECK(volume(path.graph(), path.exhaustion(3)) == 6.0);

  WeightedGraph looped(2, {{0, 0, 4.0}, {0, 1, 1.0}});
  CHECK(looped.measure(0) == 5.0);
  CHECK(looped.measure(1) == 1.0);
  CHECK(volume(looped, VertexSet({0})) == 5.0);
  CHECK(volume(looped, VertexSet()) == 0.0);
}

TEST_CASE("cut measure follows the ordered double sum") {
  // two triples joined by three unit edges
  WeightedGraph g(6, {{0, 3, 1.0}, {1, 4, 1.0}, {2, 5, 1.0}, {0, 1, 1.0}, {3, 4, 1.0}});
  CHECK(cut_measure(g, VertexSet({0, 1, 2}), VertexSet({3, 4, 5})) == 3.0);

  WeightedGraph tri = cycle_graph(3);
  CHECK(cut_measure(tri, tri.all_vertices(), tri.all_vertices()) == 6.0);

  WeightedGraph loop(1, {{0, 0, 2.0}});
  CHECK(cut_measure(loop, VertexSet({0}), VertexSet({0})) == 2.0);
}

TEST_CASE("volume decomposes into internal cut plus boundary") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 10;
    spec.allow_loops = (i % 2 == 0);
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, 2 + rng.below(g.vertex_count() - 1));
    double vol = volume(g, omega);
    CHECK(vol == doctest::Approx(oracle::volume(g, omega.ids())).epsilon(1e-12));
    CHECK(vol == doctest::Approx(cut_measure(g, omega, omega) + boundary_measure(g, omega))
                     .epsilon(1e-12));
    // symmetry of the double sum
    VertexSet other = g.all_vertices().minus(omega);
    if (!other.empty())
      CHECK(cut_measure(g, omega, other) ==
            doctest::Approx(cut_measure(g, other, omega)).epsilon(1e-12));
  }
}

TEST_CASE("partition pair caches match recomputation") {
  Rng rng(12);
  RandomGraphSpec spec;
  WeightedGraph g = random_connected_graph(rng, spec);
  VertexSet a = random_connected_subset(rng, g, 2);
  VertexSet b = g.all_vertices().minus(a);
  PartitionPair p = PartitionPair::compute(g, a, b);
  CHECK(p.cross == doctest::Approx(oracle::cut(g, a.ids(), b.ids())));
  CHECK(p.vol1 == doctest::Approx(oracle::volume(g, a.ids())));
  CHECK(p.boundary == doctest::Approx(oracle::boundary(g, a.unioned(b).ids())));
  CHECK_THROWS_AS(PartitionPair::compute(g, a, a), std::invalid_argument);
}

TEST_CASE("bipartition is deterministic and detects odd structure") {
  WeightedGraph c6 = cycle_graph(6);
  auto bip = bipartition(c6, c6.all_vertices());
  REQUIRE(bip.has_value());
  CHECK(bip->first == VertexSet({0, 2, 4}));
  CHECK(bip->second == VertexSet({1, 3, 5}));

  WeightedGraph tri = cycle_graph(3);
  CHECK_FALSE(bipartition(tri, tri.all_vertices()).has_value());

  WeightedGraph looped(1, {{0, 0, 1.0}});
  CHECK_FALSE(bipartition(looped, looped.all_vertices()).has_value());
}

TEST_CASE("odd girth with witnesses") {
  WeightedGraph c5 = cycle_graph(5);
  OddGirth og5 = odd_girth(c5, c5.all_vertices());
  REQUIRE(og5.is_finite());
  CHECK(*og5.length == 5);
  CHECK(og5.witness.size() == 5);

  WeightedGraph c6 = cycle_graph(6);
  CHECK_FALSE(odd_girth(c6, c6.all_vertices()).is_finite());

  WeightedGraph pet = petersen_graph();
  OddGirth ogp = odd_girth(pet, pet.all_vertices());
  REQUIRE(ogp.is_finite());
  CHECK(*ogp.length == 5);
  CHECK_FALSE(oracle::has_odd_circuit(pet, 3));
  CHECK(oracle::has_odd_circuit(pet, 5));

  WeightedGraph looped(2, {{0, 1, 1.0}, {1, 1, 2.0}});
  OddGirth ogl = odd_girth(looped, looped.all_vertices());
  REQUIRE(ogl.is_finite());
  CHECK(*ogl.length == 1);
  CHECK(ogl.witness == std::vector<int>{1});
}

TEST_CASE("odd girth witness is a genuine circuit") {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 12;
    spec.force_odd_cycle = (i % 2 == 0);
    WeightedGraph g = random_connected_graph(rng, spec);
    OddGirth og = odd_girth(g, g.all_vertices());
    bool bip = bipartition(g, g.all_vertices()).has_value();
    CHECK(og.is_finite() == !bip);
    if (og.is_finite() && *og.length >= 3) {
      CHECK(*og.length % 2 == 1);
      CHECK(static_cast<int>(og.witness.size()) == *og.length);
      for (size_t k = 0; k < og.witness.size(); ++k) {
        int u = og.witness[k];
        int v = og.witness[(k + 1) % og.witness.size()];
        CHECK(g.edge_weight(u, v) > 0.0);
        for (size_t j = k + 1; j < og.witness.size(); ++j) CHECK(og.witness[j] != u);
      }
    }
  }
}

TEST_CASE("balls and sphere profiles on the path") {
  GraphFamily path = make_infinite_path(6);
  VertexSet b2 = ball(path.graph(), path.base_vertex(), 2);
  CHECK(b2.size() == 5);
  for (const char* label : {"-2", "-1", "0", "1", "2"})
    CHECK(b2.contains(path.id_of(label)));

  SphereProfile prof = sphere_profile(path.graph(), path.base_vertex(), 4);
  for (int r = 0; r <= 4; ++r) {
    CHECK(prof.p[static_cast<size_t>(r)] == 2.0);
    CHECK(prof.q[static_cast<size_t>(r)] == 0.0);
  }
}

TEST_CASE("sphere profile of the degree-3 tree") {
  GraphFamily tree = make_homogeneous_tree(3, 4);
  SphereProfile prof = sphere_profile(tree.graph(), tree.base_vertex(), 3);
  CHECK(prof.sphere_size[2] == 6);
  CHECK(prof.p[0] == 3.0);
  CHECK(prof.p[1] == 6.0);
  CHECK(prof.q[0] == 0.0);
  CHECK(prof.q[1] == 0.0);
}

TEST_CASE("ladder sphere profile against an independent construction") {
  GraphFamily ladder = make_ladder(8);
  SphereProfile prof = sphere_profile(ladder.graph(), ladder.base_vertex(), 5);

  // rebuild the double path directly from the cross rule |i - j'| <= 1
  const int lim = 7;
  auto idx = [lim](int i, int s) { return (i + lim) * 2 + s; };
  std::vector<WeightedEdge> edges;
  for (int i = -lim; i <= lim; ++i) {
    edges.push_back({idx(i, 0), idx(i, 1), 1.0});
    if (i < lim) {
      edges.push_back({idx(i, 0), idx(i + 1, 0), 1.0});
      edges.push_back({idx(i, 1), idx(i + 1, 1), 1.0});
      edges.push_back({idx(i, 0), idx(i + 1, 1), 1.0});
      edges.push_back({idx(i, 1), idx(i + 1, 0), 1.0});
    }
  }
  WeightedGraph mirror(2 * (2 * lim + 1), edges);
  auto dist = mirror.distances_from(idx(0, 0));
  for (int r = 1; r <= 5; ++r) {
    double q = 0.0;
    for (int v = 0; v < mirror.vertex_count(); ++v) {
      if (dist[static_cast<size_t>(v)] != r) continue;
      for (const auto& nb : mirror.neighbors(v))
        if (dist[static_cast<size_t>(nb.vertex)] == r) q += nb.weight;
    }
    CHECK(prof.q[static_cast<size_t>(r)] == q);
  }
  CHECK(prof.q[1] == 12.0);
  CHECK(prof.q[2] == 4.0);
  CHECK(prof.q[5] == 4.0);
}

TEST_CASE("sphere profile volume identity") {
  for (const GraphFamily& fam : {make_infinite_path(8), make_homogeneous_tree(3, 5),
                                 make_ladder(6), make_cayley_line_triangle(6),
                                 make_selfloop_chain(8)}) {
    SphereProfile prof = sphere_profile(fam.graph(), fam.base_vertex(), fam.safe_radius() - 1);
    for (int r = 1; r < fam.safe_radius(); ++r) {
      double lhs = prof.ball_volume[static_cast<size_t>(r)];
      double rhs = prof.cumulative_p[static_cast<size_t>(r) - 1] +
                   prof.cumulative_p[static_cast<size_t>(r)] +
                   prof.cumulative_q[static_cast<size_t>(r)];
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("radial splits") {
  GraphFamily path = make_infinite_path(6);
  RadialSplit s = radial_split(path.graph(), path.base_vertex(), path.id_of("3"));
  CHECK(s.outward == 1.0);
  CHECK(s.inward == 1.0);
  CHECK(s.lateral == 0.0);

  GraphFamily tree = make_homogeneous_tree(3, 4);
  RadialSplit t = radial_split(tree.graph(), tree.base_vertex(), tree.id_of("1.0"));
  CHECK(t.outward == 2.0);
  CHECK(t.inward == 1.0);
  CHECK(t.lateral == 0.0);

  GraphFamily prism = make_cayley_line_triangle(6);
  RadialSplit fiber = radial_split(prism.graph(), prism.base_vertex(), prism.id_of("2,1"));
  CHECK(fiber.outward == 1.0);
  CHECK(fiber.inward == 2.0);
  CHECK(fiber.lateral == 1.0);
  RadialSplit rail = radial_split(prism.graph(), prism.base_vertex(), prism.id_of("2,0"));
  CHECK(rail.outward == 3.0);
  CHECK(rail.inward == 1.0);
  CHECK(rail.lateral == 0.0);

  // the three parts always sum to the measure
  auto splits = radial_splits(prism.graph(), prism.base_vertex());
  for (int v = 0; v < prism.graph().vertex_count(); ++v)
    CHECK(splits[static_cast<size_t>(v)].total() ==
          doctest::Approx(prism.graph().measure(v)).epsilon(1e-12));

  // self-loops land in the lateral part
  GraphFamily chain = make_selfloop_chain(6);
  RadialSplit c = radial_split(chain.graph(), chain.base_vertex(), chain.id_of("3"));
  CHECK(c.lateral == 8.0);
}

TEST_CASE("graph json round trip and validation") {
  Json j{{"vertices", 3}, {"edges", {{0, 1, 2.5}, {1, 2, 1.0}, {2, 2, 0.5}}}};
  WeightedGraph g = graph_from_json(j);
  CHECK(g.measure(2) == 1.5);
  CHECK(g.loop_weight(2) == 0.5);
  Json back = to_json(g);
  WeightedGraph g2 = graph_from_json(back);
  CHECK(to_json(g2) == back);

  CHECK_THROWS_AS(graph_from_json(Json{{"vertices", 2}, {"edges", {{0, 1, 1.0}, {1, 0, 1.0}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json{{"vertices", 2}, {"edges", {{0, 1, -1.0}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json{{"vertices", 2}, {"edges", {{0, 5, 1.0}}}}),
                  std::invalid_argument);
}

TEST_CASE("radial split needs a reachable vertex") {
  WeightedGraph two_parts(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK_THROWS_AS(radial_split(two_parts, 0, 3), std::invalid_argument);
}

TEST_CASE("family balls respect the explored horizon") {
  GraphFamily path = make_infinite_path(5);
  CHECK(path.metric_ball(path.base_vertex(), 4).size() == 9);
  CHECK_THROWS_AS(path.metric_ball(path.base_vertex(), 6), std::invalid_argument);
}
