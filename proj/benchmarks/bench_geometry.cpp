#include <benchmark/benchmark.h>

#include <cmath>

#include "geoclique/gadget.hpp"
#include "geoclique/geom.hpp"
#include "geoclique/structural.hpp"

using namespace geoclique;

namespace {

GeometricInstance corpus(ObjectKind kind, std::size_t n, std::uint64_t seed) {
  GeneratorSpec s;
  s.kind = kind;
  s.n = n;
  s.hi = 2.2 * std::sqrt(static_cast<double>(n));
  s.rmin = 0.5;
  s.rmax = 2;
  return generate_instance(s, seed);
}

}  // namespace

static void BM_IntersectionGraph(benchmark::State& state) {
  const auto kind = static_cast<ObjectKind>(state.range(0));
  const GeometricInstance inst = corpus(kind, static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_intersection_graph(inst));
  state.SetLabel(to_string(kind));
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_IntersectionGraph)
    ->ArgsProduct({{0, 1, 2}, {32, 128}})
    ->Unit(benchmark::kMicrosecond);

static void BM_Gadget(benchmark::State& state) {
  const auto target = static_cast<GadgetTarget>(state.range(0));
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  GadgetOptions opt;
  opt.min_margin = 0;  // timing only; the margin floor is exercised in the tests
  for (auto _ : state) benchmark::DoNotOptimize(realize_co2subdivision(k4, target, opt));
  state.SetLabel(to_string(target));
}
BENCHMARK(BM_Gadget)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_CoCycles(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(realize_co_cycles_disks({4, 6, 8}, 7));
}
BENCHMARK(BM_CoCycles)->Unit(benchmark::kMillisecond);

static void BM_CrossingProfile(benchmark::State& state) {
  Chain2 a, b;
  const auto p = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i < p; ++i) {
    const double t = 6.283185307179586 * static_cast<double>(i) / static_cast<double>(p);
    a.push_back({std::cos(t) + 0.013 * static_cast<double>(i), std::sin(t)});
    b.push_back({0.4 + 1.3 * std::cos(t + 0.1), 0.2 + 0.7 * std::sin(t + 0.1)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(crossing_profile(a, b, 3));
}
BENCHMARK(BM_CrossingProfile)->Arg(5)->Arg(9)->Arg(33);

static void BM_Needle(benchmark::State& state) {
  const Chain3 a{{0, 0, 0}, {1, 0, 0.2}, {0.3, 1, -0.1}};
  const Chain3 b{{0, 0, 1}, {0.2, 0.9, 1.4}, {-0.8, 0.1, 0.7}, {0.1, -0.5, 1.9}, {0.6, 0.4, 0.3}};
  for (auto _ : state) benchmark::DoNotOptimize(common_needle_direction(a, b));
}
BENCHMARK(BM_Needle)->Unit(benchmark::kMicrosecond);
