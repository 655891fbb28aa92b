#include <gtest/gtest.h>

#include <set>

#include "geoclique/errors.hpp"
#include "geoclique/mis.hpp"
#include "support/oracles.hpp"

using namespace geoclique;

namespace {

Graph co_disk(std::size_t n, std::uint64_t seed) {
  return complement(build_intersection_graph(oracle::disk_instance(n, seed)).graph);
}

EptasParams practical(double eps, double beta, std::optional<long long> s = std::nullopt, long long t = 50) {
  return derive_params(eps, beta, 4, 1, ParamMode::kPractical, s, t);
}

// Greedy cover: remove a vertex of highest degree until bipartite.
VertexSet greedy_cover(const Graph& g) {
  VertexSet cover;
  Bitset keep = g.all();
  while (oracle::odd_girth(induced(g, keep).graph)) {
    VertexId best = 0;
    std::size_t deg = 0;
    keep.for_each([&](std::size_t v) {
      const std::size_t d = (g.neighbors(v) & keep).count();
      if (d >= deg) deg = d, best = v;
    });
    keep.reset(best);
    cover.push_back(best);
  }
  return cover;
}

}  // namespace

TEST(Params, SpecArithmetic) {
  const auto p = derive_params(0.9, 1, 1, 1, ParamMode::kTheory);
  EXPECT_EQ(p.c, 27);
  EXPECT_NEAR(p.delta, 1.0 / 30, 1e-15);
  EXPECT_EQ(p.s, 1021);
  EXPECT_EQ(p.z, 7);
  EXPECT_EQ(derive_params(0.5, 0.5, 4).c, 168);
  EXPECT_EQ(derive_params(0.5, 1, 4, 1, ParamMode::kTheory, 3).t, 173);
}

TEST(Params, Invariants) {
  for (double eps : {0.05, 0.25, 0.5, 0.99})
    for (double beta : {1.0 / 36, 0.25, 1.0}) {
      const auto p = derive_params(eps, beta, 4);
      EXPECT_GE(p.c, 24);
      EXPECT_GE(p.z, 6);
      EXPECT_LE(p.delta, eps / 24);
    }
}

TEST(Params, PracticalSampleSize) {
  const auto p = derive_params(0.25, 0.25, 4);
  EXPECT_EQ(p.sample_size(40), 5);
  EXPECT_EQ(p.sample_size(400), 8);
  EXPECT_EQ(p.t, 50);
}

TEST(Params, RangeErrors) {
  EXPECT_THROW(derive_params(0, 1, 4), InputError);
  EXPECT_THROW(derive_params(1, 1, 4), InputError);
  EXPECT_THROW(derive_params(0.5, 0, 4), InputError);
  EXPECT_THROW(derive_params(0.5, 1.5, 4), InputError);
  EXPECT_THROW(derive_params(0.5, 1, 4, 1, ParamMode::kDeterministic, 4), InputError);
}

TEST(Eptas, BipartiteIsExact) {
  Rng rng(20);
  for (int k = 0; k < 30; ++k) {
    const Graph g = oracle::random_bipartite(40, 0.1, rng);
    const auto r = mis_eptas(g, practical(0.25, 0.5), k);
    EXPECT_EQ(r.value, static_cast<double>(g.size() - oracle::max_matching(g)));
    EXPECT_TRUE(is_independent(g, r.set));
  }
}

TEST(Eptas, ComplementOfC7) {
  const Graph g = complement(oracle::cycle(7));
  const double opt = oracle::alpha(g);
  const auto r = mis_eptas(g, practical(0.3, 2.0 / 7, 2), 0);
  EXPECT_GE(r.value, std::ceil(0.7 * opt));
}

TEST(Eptas, DiskComplementSoundness) {
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = co_disk(8 + seed % 11, seed);
    const double opt = oracle::alpha(g);
    const auto r = mis_eptas(g, practical(0.25, std::max(0.05, std::floor(20 * opt / g.size()) / 20)), seed);
    ASSERT_TRUE(is_independent(g, r.set));
    ASSERT_EQ(r.value, static_cast<double>(r.set.size()));
    good += r.value >= 0.75 * opt;
  }
  EXPECT_GE(good, 95);
}

TEST(Eptas, ThreadsDoNotChangeTheResult) {
  const Graph g = co_disk(30, 5);
  EptasOptions one, four;
  four.threads = 4;
  const auto p = practical(0.25, 0.25);
  const auto a = mis_eptas(g, p, 9, one), b = mis_eptas(g, p, 9, four);
  EXPECT_EQ(a.set, b.set);
  EXPECT_EQ(a.best_trial, b.best_trial);
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(Eptas, TwoAnticompleteCyclesAreReported) {
  const Graph g = oracle::disjoint_union(oracle::cycle(5), oracle::cycle(5));
  EptasOptions opt;
  opt.injected_sample = VertexSet{};
  try {
    mis_eptas(g, practical(0.25, 0.4), 0, opt);
    FAIL() << "expected an iocp violation";
  } catch (const IocpViolation& e) {
    EXPECT_TRUE(is_odd_cycle(g, e.first()));
    EXPECT_TRUE(is_odd_cycle(g, e.second()));
  }
}

TEST(Eptas, InjectedSampleMustBeIndependent) {
  EptasOptions opt;
  opt.injected_sample = VertexSet{0, 1};
  EXPECT_THROW(mis_eptas(oracle::cycle(7), practical(0.25, 0.4), 0, opt), InputError);
}

TEST(Eptas, LongCyclePath) {
  // C_201 with pendant stars: the base cycle is longer than c and survives the sample.
  std::vector<std::vector<std::size_t>> stars(201);
  for (std::size_t i = 0; i < 201; i += 3) stars[i] = {3};
  const auto inst = oracle::build_cycle_with_trees(201, stars);
  const double opt = static_cast<double>(oracle::cycle_with_trees_mis(inst).size());
  EptasOptions opt_s;
  opt_s.injected_sample = VertexSet{};
  const auto r = mis_eptas(inst.graph, practical(0.5, 0.5), 0, opt_s);
  EXPECT_EQ(r.paths.long_cycle, 1u);
  EXPECT_GE(r.value, 0.5 * opt);
}

TEST(Eptas, WeightedSamplingProportional) {
  Graph g = co_disk(14, 3);
  std::vector<double> w(g.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = 1 + static_cast<double>(i % 4);
  g.set_weights(w);
  const auto r = mis_eptas(g, practical(0.25, 0.2), 1);
  EXPECT_TRUE(is_independent(g, r.set));
  EXPECT_EQ(r.value, g.weight_of(r.set));
  EXPECT_GE(r.value, 0.75 * oracle::alpha(g));
}

TEST(Eptas, DeterministicModeEnumeratesSamples) {
  const Graph g = co_disk(16, 2);
  const auto r = mis_eptas(g, derive_params(0.25, 0.25, 4, 1, ParamMode::kDeterministic, 1), 0);
  EXPECT_EQ(r.trials, g.size());
  EXPECT_GE(r.value, 0.75 * oracle::alpha(g));
}

TEST(Layers, CycleAlone) {
  const Graph g = oracle::cycle(29);
  std::vector<VertexId> c(29);
  std::iota(c.begin(), c.end(), 0);
  const auto p = derive_params(0.9, 1, 4);
  const auto D = decompose_layers(g, c, p);
  EXPECT_EQ(D.lambda, 0u);
  // Block gamma holds strata gamma*z+1 .. (gamma+1)*z, i.e. those cycle vertices.
  ASSERT_EQ(D.blocks.size(), static_cast<std::size_t>(p.block_max + 1));
  for (std::size_t gamma = 0; gamma < D.blocks.size(); ++gamma) {
    VertexSet want;
    for (std::size_t j = gamma * p.z; j < std::min<std::size_t>(29, (gamma + 1) * p.z); ++j) want.push_back(j);
    EXPECT_EQ(D.blocks[gamma], want);
  }
}

TEST(Layers, PendantVertex) {
  Graph g = oracle::disjoint_union(oracle::cycle(29), Graph(1));
  g.add_edge(2, 29);
  std::vector<VertexId> c(29);
  std::iota(c.begin(), c.end(), 0);
  const auto D = decompose_layers(g, c, derive_params(0.9, 1, 4));
  ASSERT_EQ(D.lambda, 1u);
  EXPECT_EQ(D.layers[0], VertexSet{29});
  EXPECT_EQ(D.stratum(1, 3), VertexSet{29});
  EXPECT_THROW(decompose_layers(oracle::cycle(5), {0, 1, 2, 3, 4}, derive_params(0.9, 1, 4)), InputError);
}

TEST(Layers, StrataPartitionAndBlocksDisjoint) {
  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    std::vector<std::vector<std::size_t>> stars(31);
    for (auto& s : stars)
      if (rng.uniform() < 0.5) s = {rng.below(4)};
    const auto inst = oracle::build_cycle_with_trees(31, stars);
    std::vector<VertexId> c(31);
    std::iota(c.begin(), c.end(), 0);
    const auto D = decompose_layers(inst.graph, c, derive_params(0.99, 1, 4));
    for (std::size_t layer = 1; layer <= D.lambda; ++layer) {
      std::size_t total = 0;
      for (std::size_t j = 1; j <= 31; ++j) total += D.stratum(layer, j).size();
      EXPECT_EQ(total, D.layers[layer - 1].size());
    }
    std::set<VertexId> used;
    for (const auto& b : D.blocks)
      for (auto v : b) EXPECT_TRUE(used.insert(v).second);
  }
}

TEST(IocpRecursive, MatchesEptasAtLevelOne) {
  const Graph g = co_disk(16, 4);
  const auto p = practical(0.25, 0.2);
  EXPECT_EQ(mis_iocp_recursive(g, p, 3).set, mis_eptas(g, p, 3).set);
}

TEST(IocpRecursive, TwoFiveCycles) {
  const Graph g = oracle::disjoint_union(oracle::cycle(5), oracle::cycle(5));
  const auto p = derive_params(0.5, 0.4, 4, 2, ParamMode::kPractical, 1, 50);
  const auto r = mis_iocp_recursive(g, p, 0);
  EXPECT_GE(r.value, 2);
  EXPECT_TRUE(is_independent(g, r.set));
}

TEST(IocpRecursive, BipartiteExact) {
  Rng rng(22);
  const Graph g = oracle::random_bipartite(30, 0.15, rng);
  const auto r = mis_iocp_recursive(g, derive_params(0.5, 0.5, 4, 3), 0);
  EXPECT_EQ(r.value, static_cast<double>(g.size() - oracle::max_matching(g)));
}

TEST(Qptas, SmallGraphsAreExact) {
  Rng rng(23);
  for (int k = 0; k < 60; ++k) {
    const Graph g = oracle::random_graph(1 + rng.below(16), rng.uniform(0.1, 0.6), rng);
    EXPECT_EQ(qptas_branch(g, 0.25, 1, k).value, oracle::alpha(g));
  }
}

TEST(Qptas, Threshold) {
  EXPECT_EQ(qptas_threshold(16, 1), 1);
  EXPECT_GT(qptas_threshold(1'000'000, 1), 1);
}

TEST(Qptas, Star) {
  Graph star(10);
  for (VertexId v = 1; v < 10; ++v) star.add_edge(0, v);
  EXPECT_EQ(qptas_branch(star, 0.25, 1, 0).value, 9);
}

TEST(OddCycleCover, Examples) {
  EXPECT_TRUE(odd_cycle_cover(oracle::cycle(6)).empty());
  EXPECT_EQ(odd_cycle_cover(oracle::cycle(5)).size(), 5u);
  EXPECT_EQ(odd_cycle_cover(oracle::disjoint_union(oracle::cycle(3), oracle::cycle(3))).size(), 6u);
  Rng rng(24);
  for (int k = 0; k < 50; ++k) {
    const Graph g = oracle::random_graph(14, 0.3, rng);
    const auto cover = odd_cycle_cover(g);
    Bitset keep = g.all() - to_bitset(g.size(), cover);
    EXPECT_TRUE(oracle::bipartite(induced(g, keep).graph));
  }
}

TEST(ExactOcc, Examples) {
  EXPECT_EQ(mis_exact_occ(oracle::cycle(6), {}).value, 3);
  EXPECT_EQ(mis_exact_occ(oracle::cycle(5), {0}).value, 2);
  EXPECT_THROW(mis_exact_occ(oracle::cycle(5), {}), InputError);
}

TEST(ExactOcc, MatchesEnumerationWithHeuristicCovers) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = co_disk(8 + seed % 9, seed);
    EXPECT_EQ(mis_exact_occ(g, greedy_cover(g)).value, oracle::alpha(g)) << seed;
  }
}

TEST(ExactCycleNbhd, Examples) {
  EXPECT_EQ(mis_exact_cycle_nbhd(oracle::cycle(5), {0, 1, 2, 3, 4}).value, 2);
  const Graph g = complement(oracle::cycle(7));
  EXPECT_EQ(mis_exact_cycle_nbhd(g, *shortest_odd_cycle(g)).value, oracle::alpha(g));
  const Graph two = oracle::disjoint_union(oracle::cycle(3), oracle::cycle(3));
  EXPECT_THROW(mis_exact_cycle_nbhd(two, {0, 1, 2}), IocpViolation);
}

TEST(ExactCycleNbhd, DiskComplements) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = co_disk(8 + seed % 9, seed + 100);
    const auto c = shortest_odd_cycle(g);
    if (!c) continue;
    EXPECT_EQ(mis_exact_cycle_nbhd(g, *c).value, oracle::alpha(g)) << seed;
  }
}

TEST(Subexp, Examples) {
  Rng rng(25);
  const Graph b = oracle::random_bipartite(40, 0.2, rng);
  EXPECT_EQ(mis_subexp(b).value, static_cast<double>(40 - oracle::max_matching(b)));
  const Graph c9 = complement(oracle::cycle(9));
  EXPECT_EQ(mis_subexp(c9).value, oracle::alpha(c9));
}

TEST(Subexp, DiskComplements) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = co_disk(8 + seed % 11, seed + 200);
    const auto r = mis_subexp(g);
    EXPECT_TRUE(is_independent(g, r.set));
    EXPECT_EQ(r.value, oracle::alpha(g)) << seed;
  }
}

TEST(Weighted, ScalingInvariance) {
  Rng rng(26);
  for (int k = 0; k < 40; ++k) {
    Graph g = co_disk(12, 300 + k);
    std::vector<double> w(g.size());
    for (auto& x : w) x = static_cast<double>(1 + rng.below(5));
    g.set_weights(w);
    Graph h = g;
    for (auto& x : w) x *= 3;
    h.set_weights(w);
    const auto a = mis_subexp(g), b = mis_subexp(h);
    EXPECT_EQ(a.set, b.set);
    EXPECT_DOUBLE_EQ(b.value, 3 * a.value);
    EXPECT_EQ(a.value, oracle::alpha(g));
    const auto cover = odd_cycle_cover(g);
    EXPECT_EQ(mis_exact_occ(g, cover).set, mis_exact_occ(h, cover).set);
  }
}

TEST(SolveResult, Json) {
  const auto r = mis_subexp(oracle::cycle(6));
  const std::string j = to_json(r);
  for (const char* key : {"\"value\"", "\"set\"", "\"trials\"", "\"paths\"", "\"seed\""})
    EXPECT_NE(j.find(key), std::string::npos) << key;
}
