#include "medkit/barycenter.hpp"
#include "medkit/centroid.hpp"
#include "medkit/chains.hpp"
#include "medkit/corpus.hpp"
#include "medkit/pocset.hpp"

#include <benchmark/benchmark.h>

using namespace medkit;

namespace {

void BM_IsMedianGrid(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Graph g = grid_graph(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(is_median_graph(g).is_median);
  state.SetLabel(std::to_string(g.order()) + " vertices");
}
BENCHMARK(BM_IsMedianGrid)->Arg(5)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_WallspaceHypercube(benchmark::State& state) {
  const Graph g = hypercube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Wallspace(g).wall_count());
}
BENCHMARK(BM_WallspaceHypercube)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_DualRandomPocset(benchmark::State& state) {
  const Pocset p = random_pocset(static_cast<std::size_t>(state.range(0)), 0.3, 7);
  std::size_t order = 0;
  for (auto _ : state) {
    order = dual_median_graph(p).graph.order();
    benchmark::DoNotOptimize(order);
  }
  state.SetLabel(std::to_string(order) + " dual vertices");
}
BENCHMARK(BM_DualRandomPocset)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CenterOfMass(benchmark::State& state) {
  const Wallspace ws(grid_graph(8, 8));
  const auto mu = ProbMeasure::uniform(VertexSet::full(ws.order()));
  for (auto _ : state) benchmark::DoNotOptimize(center_of_mass(ws, mu).center.size());
}
BENCHMARK(BM_CenterOfMass)->Unit(benchmark::kMicrosecond);

void BM_Centroid(benchmark::State& state) {
  const Wallspace ws(staircase(static_cast<std::size_t>(state.range(0))));
  const VertexSet all = VertexSet::full(ws.order());
  for (auto _ : state) benchmark::DoNotOptimize(centroid(ws, all).size());
}
BENCHMARK(BM_Centroid)->Arg(4)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_MedianCore(benchmark::State& state) {
  const Wallspace ws(staircase(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(median_core(ws).core.size());
}
BENCHMARK(BM_MedianCore)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
