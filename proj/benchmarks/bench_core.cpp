#include "shearer/bounds.hpp"
#include "shearer/domination.hpp"
#include "shearer/graph.hpp"
#include "shearer/grid.hpp"
#include "shearer/measure.hpp"

#include <benchmark/benchmark.h>

using namespace shearer;

static void BM_XiEnumerate(benchmark::State& state) {
  Graph g = kfuzz_window(2, static_cast<int>(state.range(0)));
  VecD w(g.size(), -0.2);
  for (auto _ : state) benchmark::DoNotOptimize(xi_enumerate(g, w));
}
BENCHMARK(BM_XiEnumerate)->Arg(12)->Arg(16)->Arg(20);

static void BM_XiDeletionContraction(benchmark::State& state) {
  Graph g = kfuzz_window(2, static_cast<int>(state.range(0)));
  VecD p(g.size(), 0.8);
  for (auto _ : state) {
    XiCache<double> cache(g.size());
    benchmark::DoNotOptimize(xi_dc(g, p, cache));
  }
}
BENCHMARK(BM_XiDeletionContraction)->Arg(12)->Arg(16)->Arg(20);

static void BM_Membership(benchmark::State& state) {
  Graph g = path_graph(static_cast<int>(state.range(0)));
  VecD p(g.size(), 0.75);
  for (auto _ : state) {
    XiCache<double> cache(g.size());
    benchmark::DoNotOptimize(membership(g, p, cache).region);
  }
}
BENCHMARK(BM_Membership)->Arg(10)->Arg(14)->Arg(16);

static void BM_ConstructMeasure(benchmark::State& state) {
  Graph g = grid_box(3);
  VecD p(9, 0.85);
  for (auto _ : state) benchmark::DoNotOptimize(construct_measure(g, p).dist.mass[0]);
}
BENCHMARK(BM_ConstructMeasure);

static void BM_StrassenOracle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = path_graph(n);
  VecD p(n, 0.85);
  auto y = construct_measure(g, p).dist;
  auto x = product_dist(VecD(n, 0.2));
  for (auto _ : state) benchmark::DoNotOptimize(strassen_dominates(y, x).dominates);
}
BENCHMARK(BM_StrassenOracle)->Arg(6)->Arg(8)->Arg(10);

static void BM_DominatedValue(benchmark::State& state) {
  auto d = kfuzz_halfball_brf<double>(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dominated_value(d));
}
BENCHMARK(BM_DominatedValue)->Arg(3)->Arg(6);

static void BM_GridTransfer(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GridCells box;
  box.cols = n;
  box.row_masks.assign(n, (std::uint32_t(1) << n) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(xi_grid(box, 0.9));
}
BENCHMARK(BM_GridTransfer)->Arg(6)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
