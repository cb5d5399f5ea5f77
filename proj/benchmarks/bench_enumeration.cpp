#include <benchmark/benchmark.h>

#include "graphspec/corpus.hpp"
#include "graphspec/isoperimetry.hpp"
#include "graphspec/max_cut.hpp"
#include "graphspec/surgery.hpp"

namespace {

graphspec::WeightedGraph bench_graph(int n) {
  graphspec::Rng rng(7);
  graphspec::RandomGraphSpec spec;
  spec.min_vertices = n;
  spec.max_vertices = n;
  spec.extra_edge_factor = 2;
  return graphspec::random_connected_graph(rng, spec);
}

void BM_DualCheegerExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = bench_graph(n);
  for (auto _ : state) {
    auto r = graphspec::dual_cheeger_exact(g, g.all_vertices());
    benchmark::DoNotOptimize(r.value);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_DualCheegerExact)->DenseRange(8, 13)->Complexity();

void BM_CheegerExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = bench_graph(n);
  for (auto _ : state) {
    auto r = graphspec::cheeger_exact(g, g.all_vertices());
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_CheegerExact)->DenseRange(12, 20);

void BM_MaxCutExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = bench_graph(n);
  for (auto _ : state) {
    auto r = graphspec::max_cut_exact(g);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_MaxCutExact)->DenseRange(12, 20, 2);

}  // namespace

void BM_SurgerySplit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = bench_graph(n);
  for (auto _ : state) {
    auto r = graphspec::surgery_partition(g, g.all_vertices());
    benchmark::DoNotOptimize(r.moves);
  }
}
BENCHMARK(BM_SurgerySplit)->DenseRange(8, 24, 4);
