#include <benchmark/benchmark.h>

#include <cmath>

#include "geoclique/clique.hpp"
#include "geoclique/geom.hpp"
#include "geoclique/mis.hpp"
#include "geoclique/structural.hpp"

using namespace geoclique;

namespace {

GeometricInstance disks(std::size_t n, std::uint64_t seed, double spread = 2.2) {
  GeneratorSpec s;
  s.n = n;
  s.hi = spread * std::sqrt(static_cast<double>(n));
  s.rmin = 0.5;
  s.rmax = 2;
  return generate_instance(s, seed);
}

Graph co_disk(std::size_t n, std::uint64_t seed, double spread = 2.2) {
  return complement(build_intersection_graph(disks(n, seed, spread)).graph);
}

}  // namespace

static void BM_BruteForceClique(benchmark::State& state) {
  const Graph g = build_intersection_graph(disks(static_cast<std::size_t>(state.range(0)), 5)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(g, Objective::kClique));
}
BENCHMARK(BM_BruteForceClique)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMicrosecond);

static void BM_MisBipartite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Graph g(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i * 7 + j * 13) % 5 == 0) g.add_edge(i, n + j);
  for (auto _ : state) benchmark::DoNotOptimize(mis_bipartite(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MisBipartite)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_ShortestOddCycle(benchmark::State& state) {
  const Graph g = co_disk(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_odd_cycle(g));
}
BENCHMARK(BM_ShortestOddCycle)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

static void BM_MisEptas(benchmark::State& state) {
  // Packed disks, so random samples of the complement are often independent.
  const Graph g = co_disk(static_cast<std::size_t>(state.range(0)), 11, 0.3);
  const EptasParams p = derive_params(0.25, 0.25, 4);
  EptasOptions opt;
  opt.threads = static_cast<std::size_t>(state.range(1));
  SolveResult r;
  for (auto _ : state) r = mis_eptas(g, p, 0, opt);
  state.counters["value"] = r.value;
  state.counters["skipped"] = static_cast<double>(r.paths.skipped);
}
BENCHMARK(BM_MisEptas)->ArgsProduct({{24, 48}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_MisSubexp(benchmark::State& state) {
  const Graph g = co_disk(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(mis_subexp(g));
}
BENCHMARK(BM_MisSubexp)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_CliqueDisk(benchmark::State& state) {
  const GeometricInstance inst = disks(static_cast<std::size_t>(state.range(0)), 17);
  PipelineConfig cfg;
  cfg.mode = static_cast<CliqueMode>(state.range(1));
  for (auto _ : state) {
    if (cfg.mode == CliqueMode::kPierce2)
      benchmark::DoNotOptimize(clique_pierce2(inst));
    else
      benchmark::DoNotOptimize(clique_disk(inst, cfg));
  }
}
BENCHMARK(BM_CliqueDisk)
    ->Args({18, static_cast<int>(CliqueMode::kEptas)})
    ->Args({18, static_cast<int>(CliqueMode::kSubexp)})
    ->Args({18, static_cast<int>(CliqueMode::kPierce2)})
    ->Args({48, static_cast<int>(CliqueMode::kEptas)})
    ->Unit(benchmark::kMillisecond);

static void BM_IocpSearch(benchmark::State& state) {
  const Graph g = co_disk(static_cast<std::size_t>(state.range(0)), 19);
  for (auto _ : state) benchmark::DoNotOptimize(find_two_anticomplete_odd_cycles(g));
}
BENCHMARK(BM_IocpSearch)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_VcDimension(benchmark::State& state) {
  const Graph g = build_intersection_graph(disks(static_cast<std::size_t>(state.range(0)), 23)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(vc_dimension(g));
}
BENCHMARK(BM_VcDimension)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
