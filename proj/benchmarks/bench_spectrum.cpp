#include <benchmark/benchmark.h>

#include "graphspec/dirichlet.hpp"
#include "graphspec/family.hpp"
#include "graphspec/comparison.hpp"
#include "graphspec/spectral.hpp"

namespace {

void BM_PathSpectrum(benchmark::State& state) {
  auto fam = graphspec::make_infinite_path(static_cast<int>(state.range(0)) + 2);
  auto omega = fam.exhaustion(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    graphspec::DirichletOperator op(fam.graph(), omega);
    auto sp = graphspec::spectrum(op);
    benchmark::DoNotOptimize(sp.eigenvalues.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PathSpectrum)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_TreeBallSpectrum(benchmark::State& state) {
  auto fam = graphspec::make_homogeneous_tree(3, static_cast<int>(state.range(0)) + 1);
  auto omega = fam.exhaustion(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    graphspec::DirichletOperator op(fam.graph(), omega);
    auto sp = graphspec::spectrum(op);
    benchmark::DoNotOptimize(sp.eigenvalues.data());
  }
}
BENCHMARK(BM_TreeBallSpectrum)->DenseRange(3, 6);

void BM_CircuitClustering(benchmark::State& state) {
  auto fam = graphspec::make_cayley_line_triangle(10);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = graphspec::clustering_coefficient(fam.graph(), fam.base_vertex(), r);
    benchmark::DoNotOptimize(c.value);
  }
}
BENCHMARK(BM_CircuitClustering)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
