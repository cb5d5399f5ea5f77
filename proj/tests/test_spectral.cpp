#include "doctest.h"

#include <cmath>
#include <numbers>

#include "graphspec/bipartite.hpp"
#include "graphspec/corpus.hpp"
#include "graphspec/dirichlet.hpp"
#include "graphspec/family.hpp"
#include "graphspec/serialize.hpp"
#include "graphspec/spectral.hpp"
#include "oracles.hpp"

using namespace graphspec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("operator rows on a two-vertex window of the path") {
  GraphFamily path = make_infinite_path(4);
  VertexSet omega({path.id_of("0"), path.id_of("1")});
  DirichletOperator op(path.graph(), omega);
  std::vector<double> e0{1.0, 0.0}, e1{0.0, 1.0};
  auto r0 = op.apply(e0);
  auto r1 = op.apply(e1);
  CHECK(r0[0] == doctest::Approx(1.0));
  CHECK(r0[1] == doctest::Approx(-0.5));
  CHECK(r1[0] == doctest::Approx(-0.5));
  CHECK(r1[1] == doctest::Approx(1.0));
  // the symmetric form is exactly symmetric
  const Matrix& m = op.symmetric_form();
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) CHECK(m.at(i, j) == m.at(j, i));
}

TEST_CASE("singleton window with a loop has the single diagonal eigenvalue") {
  WeightedGraph g(2, {{0, 0, 3.0}, {0, 1, 1.0}});
  DirichletOperator op(g, VertexSet({0}));
  SpectralResult sp = spectrum(op);
  CHECK(sp.size() == 1);
  CHECK(sp.lambda1() == doctest::Approx(1.0 - 3.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("window covering the whole graph degenerates to the ordinary operator") {
  WeightedGraph g = cycle_graph(5);
  SpectralResult sp = spectrum(DirichletOperator(g, g.all_vertices()));
  CHECK(sp.lambda1() == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(sp.lambda_max() == doctest::Approx(1.0 - std::cos(4.0 * kPi / 5.0)).epsilon(1e-9));
}

TEST_CASE("closed-form windows of the product families") {
  GraphFamily path = make_infinite_path(6);
  SpectralResult sp = spectrum(DirichletOperator(path.graph(), path.exhaustion(5)));
  for (int j = 1; j <= 5; ++j)
    CHECK(sp.eigenvalues[static_cast<size_t>(j - 1)] ==
          doctest::Approx(1.0 - std::cos(j * kPi / 6.0)).epsilon(1e-9));

  GraphFamily ladder = make_ladder(11);
  SpectralResult sl = spectrum(DirichletOperator(ladder.graph(), ladder.exhaustion(3)));
  CHECK(sl.lambda1() == doctest::Approx(0.8 * (1.0 - std::cos(kPi / 4.0))).epsilon(1e-9));
  CHECK(sl.lambda_max() == doctest::Approx(0.8 * (1.0 + std::cos(kPi / 4.0))).epsilon(1e-9));

  GraphFamily prism = make_cayley_line_triangle(11);
  SpectralResult sz = spectrum(DirichletOperator(prism.graph(), prism.exhaustion(2)));
  CHECK(sz.lambda1() == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(sz.lambda_max() == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("residuals, orthonormality, and the dense-definition oracle") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 12;
    spec.allow_loops = (i % 2 == 0);
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, 2 + rng.below(g.vertex_count() - 1));
    DirichletOperator op(g, omega);
    SpectralResult sp = spectrum(op);
    CHECK(sp.max_residual <= 1e-9 * sp.size());
    // mu-orthonormal eigenvectors
    for (int a = 0; a < sp.size(); ++a)
      for (int b = a; b < sp.size(); ++b) {
        auto fa = sp.eigenvector(a);
        auto fb = sp.eigenvector(b);
        CHECK(mu_inner(op, fa, fb) == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-10));
      }
    // library action agrees with the dense definition
    std::vector<double> f(static_cast<size_t>(omega.size()));
    for (auto& x : f) x = rng.unit() - 0.5;
    auto lf = op.apply(f);
    auto lf2 = oracle::dirichlet_apply(g, omega.ids(), f);
    for (size_t k = 0; k < f.size(); ++k)
      CHECK(lf[k] == doctest::Approx(lf2[k]).epsilon(1e-12));
  }
}

TEST_CASE("energy form matches the operator inner product") {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 3;
    spec.max_vertices = 10;
    spec.allow_loops = (i % 3 == 0);
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, 2 + rng.below(g.vertex_count() - 1));
    DirichletOperator op(g, omega);
    std::vector<double> f(static_cast<size_t>(omega.size())), h(f.size());
    for (auto& x : f) x = rng.unit() - 0.5;
    for (auto& x : h) x = rng.unit() - 0.5;
    auto lf = op.apply(f);
    double direct = mu_inner(op, lf, h);
    CHECK(green_form(op, f, h) == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("rayleigh quotient of indicators and eigenvectors") {
  GraphFamily path = make_infinite_path(8);
  VertexSet omega = path.exhaustion(5);
  DirichletOperator op(path.graph(), omega);

  // indicator of a sub-window reproduces the boundary-to-volume ratio
  VertexSet u({path.id_of("0"), path.id_of("1")});
  std::vector<double> f(static_cast<size_t>(omega.size()), 0.0);
  for (int v : u) f[static_cast<size_t>(op.position_of(v))] = 1.0;
  CHECK(rayleigh(op, f) ==
        doctest::Approx(boundary_measure(path.graph(), u) / volume(path.graph(), u))
            .epsilon(1e-12));

  SpectralResult sp = spectrum(op);
  for (int k = 0; k < sp.size(); ++k) {
    auto g = sp.eigenvector(k);
    CHECK(rayleigh(op, g) ==
          doctest::Approx(sp.eigenvalues[static_cast<size_t>(k)]).epsilon(1e-9));
  }
  std::vector<double> zero(static_cast<size_t>(omega.size()), 0.0);
  CHECK_THROWS_AS(rayleigh(op, zero), std::invalid_argument);
}

TEST_CASE("companion form value matches two minus the top eigenvalue") {
  GraphFamily path = make_infinite_path(8);
  DirichletOperator op(path.graph(), path.exhaustion(5));
  CHECK(q_smallest(op) == doctest::Approx(1.0 - std::cos(kPi / 6.0)).epsilon(1e-9));

  WeightedGraph tri = cycle_graph(3);
  DirichletOperator top(tri, tri.all_vertices());
  CHECK(q_smallest(top) > 1e-6);  // odd circuit keeps the top away from 2
}

TEST_CASE("ground-state structure on connected windows") {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 10;
    spec.allow_loops = (i % 2 == 0);
    WeightedGraph g = random_connected_graph(rng, spec);
    int size = 2 + rng.below(g.vertex_count() - 2);
    VertexSet omega = random_connected_subset(rng, g, size);
    if (omega.size() == g.vertex_count()) continue;  // keep the window proper
    DirichletOperator op(g, omega);
    SpectralResult sp = spectrum(op);

    // strictly positive bottom, simple, one-signed ground state
    CHECK(sp.lambda1() > 0.0);
    if (sp.size() >= 2) CHECK(sp.eigenvalues[1] - sp.eigenvalues[0] > 1e-12);
    auto f1 = sp.eigenvector(0);
    double lo = 1e300, hi = -1e300;
    for (double x : f1) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    CHECK(lo * hi > 0.0);

    // diagonal average controls the bottom; the loop terms control the sum
    double diag = 0.0, min_loop_frac = 1e300;
    for (int k = 0; k < omega.size(); ++k) {
      diag += g.loop_weight(omega[k]) / g.measure(omega[k]);
      min_loop_frac = std::min(min_loop_frac, g.loop_weight(omega[k]) / g.measure(omega[k]));
    }
    CHECK(sp.lambda1() <= 1.0 - diag / omega.size() + 1e-9);
    CHECK(sp.lambda1() + sp.lambda_max() <= 2.0 - 2.0 * min_loop_frac + 1e-9);
  }
}

TEST_CASE("bipartite windows have mirror spectra and a nowhere-zero top state") {
  Rng rng(24);
  for (int i = 0; i < 40; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 4;
    spec.max_vertices = 10;
    spec.force_bipartite = true;
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, 3 + rng.below(g.vertex_count() - 2));
    DirichletOperator op(g, omega);
    SpectralResult sp = spectrum(op);
    const int n = sp.size();
    for (int k = 0; k < n; ++k)
      CHECK(sp.eigenvalues[static_cast<size_t>(k)] +
                sp.eigenvalues[static_cast<size_t>(n - 1 - k)] ==
            doctest::Approx(2.0).epsilon(1e-9));
    // top eigenvalue simple, top state is the sign-flipped ground state
    if (n >= 2) CHECK(sp.eigenvalues[static_cast<size_t>(n - 1)] -
                          sp.eigenvalues[static_cast<size_t>(n - 2)] > 1e-12);
    auto bip = bipartition(g, omega);
    REQUIRE(bip.has_value());
    auto f1 = sp.eigenvector(0);
    auto fm = sp.eigenvector(n - 1);
    // align global sign at the first entry
    double sign = (f1[0] * fm[0] > 0.0) ? 1.0 : -1.0;
    for (int k = 0; k < n; ++k) {
      CHECK(fm[static_cast<size_t>(k)] != 0.0);
      double expect = bip->first.contains(op.omega()[k]) ? sign * f1[static_cast<size_t>(k)]
                                                         : -sign * f1[static_cast<size_t>(k)];
      CHECK(fm[static_cast<size_t>(k)] == doctest::Approx(expect).epsilon(1e-7));
    }
  }
}

TEST_CASE("positive-part quotient stays below an eigenvalue that dominates it") {
  GraphFamily path = make_infinite_path(8);
  DirichletOperator op(path.graph(), path.exhaustion(6));
  SpectralResult sp = spectrum(op);
  // the top eigenvector satisfies the pointwise inequality at lambda_max
  auto fm = sp.eigenvector(sp.size() - 1);
  std::vector<double> plus(fm.size());
  for (size_t k = 0; k < fm.size(); ++k) plus[k] = std::max(fm[k], 0.0);
  CHECK(rayleigh(op, plus) <= sp.lambda_max() + 1e-9);
  // and the ground state realizes equality
  auto f1 = sp.eigenvector(0);
  std::vector<double> p1(f1.size());
  bool flip = f1[0] < 0.0;
  for (size_t k = 0; k < f1.size(); ++k) p1[k] = std::max(flip ? -f1[k] : f1[k], 0.0);
  CHECK(rayleigh(op, p1) == doctest::Approx(sp.lambda1()).epsilon(1e-9));
}

TEST_CASE("spectral result serialization carries the headline numbers") {
  GraphFamily path = make_infinite_path(5);
  SpectralResult sp = spectrum(DirichletOperator(path.graph(), path.exhaustion(3)));
  Json j = to_json(sp);
  CHECK(j["eigenvalues"].size() == 3);
  CHECK(j["lambda1"].get<double>() == doctest::Approx(sp.lambda1()));
  CHECK(j["lambdamax"].get<double>() == doctest::Approx(sp.lambda_max()));
  CHECK(j.contains("residual"));
}

TEST_CASE("oversized windows and isolated vertices are rejected") {
  WeightedGraph g(3, {{0, 1, 1.0}});
  CHECK_THROWS_AS(DirichletOperator(g, VertexSet({2})), std::invalid_argument);
  CHECK_THROWS_AS(DirichletOperator(g, VertexSet()), std::invalid_argument);
}

TEST_CASE("the dense solver stays on the closed form at larger sizes") {
  GraphFamily path = make_infinite_path(125);
  DirichletOperator op(path.graph(), path.exhaustion(120));
  SpectralResult sp = spectrum(op);
  for (int j = 1; j <= 120; ++j)
    CHECK(sp.eigenvalues[static_cast<size_t>(j - 1)] ==
          doctest::Approx(1.0 - std::cos(j * std::numbers::pi / 121.0)).epsilon(1e-9));
  CHECK(sp.max_residual <= 1e-9 * sp.size());
}

TEST_CASE("sum form complements the difference form") {
  Rng rng(25);
  for (int i = 0; i < 50; ++i) {
    RandomGraphSpec spec;
    spec.min_vertices = 3;
    spec.max_vertices = 10;
    spec.allow_loops = (i % 2 == 0);
    WeightedGraph g = random_connected_graph(rng, spec);
    VertexSet omega = random_connected_subset(rng, g, 2 + rng.below(g.vertex_count() - 1));
    DirichletOperator op(g, omega);
    std::vector<double> f(static_cast<size_t>(omega.size())), h(f.size());
    for (auto& x : f) x = rng.unit() - 0.5;
    for (auto& x : h) x = rng.unit() - 0.5;
    // (Qf, g) = 2 (f, g) - (Lf, g) pointwise in the forms
    double lhs = q_form(op, f, h);
    double rhs = 2.0 * mu_inner(op, f, h) - green_form(op, f, h);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}
