#include "doctest.h"

#include <cmath>

#include "graphspec/bipartite.hpp"
#include "graphspec/dirichlet.hpp"
#include "graphspec/family.hpp"
#include "graphspec/halfline.hpp"
#include "graphspec/isoperimetry.hpp"
#include "graphspec/serialize.hpp"
#include "graphspec/spectral.hpp"

using namespace graphspec;

TEST_CASE("canonical blocks and safety of the two-sided path") {
  GraphFamily path = make_infinite_path(6);
  CHECK(path.label(path.base_vertex()) == "0");
  VertexSet omega = path.exhaustion(4);
  CHECK(omega.size() == 4);
  for (const char* l : {"0", "1", "2", "3"}) CHECK(omega.contains(path.id_of(l)));
  CHECK(path.is_safe(omega));
  CHECK_FALSE(path.is_safe(VertexSet({path.id_of("7")})));
  CHECK_THROWS_AS(path.exhaustion(99), std::invalid_argument);
  CHECK_THROWS_AS(path.id_of("nope"), std::invalid_argument);
}

TEST_CASE("construction is reproducible: same ids, labels, and edges") {
  GraphFamily a = make_cayley_line_triangle(6);
  GraphFamily b = make_cayley_line_triangle(6);
  REQUIRE(a.graph().vertex_count() == b.graph().vertex_count());
  for (int v = 0; v < a.graph().vertex_count(); ++v) {
    CHECK(a.label(v) == b.label(v));
    CHECK(a.graph().measure(v) == b.graph().measure(v));
  }
  CHECK(to_json(a.graph()) == to_json(b.graph()));
}

TEST_CASE("declared structure flags match sampled structure") {
  for (const auto& name : family_names()) {
    GraphFamily fam = family_by_name(name, {});
    bool probe_bipartite = bipartition(fam.graph(), fam.exhaustion(3)).has_value();
    CHECK(probe_bipartite == fam.metadata().bipartite);
    CHECK(fam.graph().has_loops() == fam.metadata().has_loops);
    // nesting
    CHECK(fam.exhaustion(1).is_subset_of(fam.exhaustion(2)));
    CHECK(fam.exhaustion(2).is_subset_of(fam.exhaustion(3)));
    Json manifest = family_manifest(fam);
    CHECK(manifest["name"] == name);
    CHECK(manifest.contains("safe_radius"));
  }
  CHECK_THROWS_AS(family_by_name("no_such_family", {}), std::invalid_argument);
}

TEST_CASE("geometric half-line family matches its closed form at l = 2") {
  GraphFamily flat = make_halfline_family(2.0, 12);
  for (int r = 1; r <= 10; ++r) {
    SpectralResult sp = spectrum(DirichletOperator(flat.graph(), flat.exhaustion(r)));
    HalfLineModel m = HalfLineModel::solve(2.0, r);
    CHECK(sp.lambda1() == doctest::Approx(m.lambda1).epsilon(1e-9));
    CHECK(sp.lambda_max() == doctest::Approx(m.lambda_max).epsilon(1e-9));
  }
}

TEST_CASE("looped chain weights grow geometrically") {
  GraphFamily chain = make_selfloop_chain(10);
  int v3 = chain.id_of("3");
  CHECK(chain.graph().measure(v3) == 10.0);
  CHECK(chain.graph().loop_weight(v3) == 8.0);
  CHECK(1.0 - chain.graph().loop_weight(v3) / chain.graph().measure(v3) ==
        doctest::Approx(2.0 / 10.0));
}

TEST_CASE("lattice with bipartite block: volumes and the equality pair") {
  GraphFamily fam = make_lattice_with_bipartite_block(3, 3, 5);
  VertexSet block = fam.named_sets().at("block");
  CHECK(block.size() == 6);
  CHECK(volume(fam.graph(), block) == 19.0);  // nine block edges plus the connector
  CHECK(boundary_measure(fam.graph(), block) == 1.0);

  VertexSet omega = fam.named_sets().at("example_omega");
  CHECK(omega.size() == 11);
  IsoperimetricResult h = cheeger_exact(fam.graph(), omega);
  CHECK(h.value == doctest::Approx(1.0 / 19.0).epsilon(1e-15));
  CHECK(h.witness == block);
  IsoperimetricResult hb = dual_cheeger_exact(fam.graph(), omega);
  CHECK(hb.value == doctest::Approx(18.0 / 19.0).epsilon(1e-15));
  CHECK(h.value + hb.value == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("branching tree levels and frontier aggregation") {
  GraphFamily tree = make_rapidly_branching_tree(4);
  // level sizes 1, 2, 6, 24, 120 under the default schedule
  CHECK(tree.exhaustion(1).size() == 3);
  CHECK(tree.exhaustion(2).size() == 9);
  CHECK(tree.exhaustion(3).size() == 33);
  CHECK(tree.exhaustion(4).size() == 153);
  // depth-4 vertices keep their true downward weight through the aggregate
  int deep = tree.exhaustion(4).ids().back();
  CHECK(tree.graph().measure(deep) == doctest::Approx(1.0 + 6.0));  // parent + b(4)

  GraphFamily custom = make_rapidly_branching_tree([](int) { return 2; }, 5);
  CHECK(custom.exhaustion(2).size() == 7);
}

TEST_CASE("homogeneous tree metadata") {
  GraphFamily tree = make_homogeneous_tree(4, 5);
  CHECK(tree.metadata().bipartite);
  REQUIRE(tree.metadata().declared_tail.has_value());
  CHECK(tree.metadata().declared_tail->m_minus_inf == doctest::Approx(0.25));
  CHECK(tree.metadata().declared_tail->kappa_inf == 0.0);
  REQUIRE(tree.metadata().hbar_upper.has_value());
  CHECK(*tree.metadata().hbar_upper == doctest::Approx(0.5));
  // degree check away from the root
  int child = tree.id_of("1.0");
  CHECK(tree.graph().measure(child) == 4.0);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(make_homogeneous_tree(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_halfline_family(1.2, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_lattice_with_bipartite_block(0, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_infinite_path(0), std::invalid_argument);
}
