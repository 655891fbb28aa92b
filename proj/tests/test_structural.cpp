#include <gtest/gtest.h>

#include "geoclique/errors.hpp"
#include "geoclique/gadget.hpp"
#include "geoclique/structural.hpp"
#include "support/oracles.hpp"

using namespace geoclique;

namespace {

Chain2 centers(const GeometricInstance& inst, std::size_t from, std::size_t len) {
  Chain2 c;
  // Exact power-of-two scaling keeps every orientation and fits the snapping range.
  const double k = 0x1.0p-24;
  for (std::size_t i = from; i < from + len; ++i) c.push_back({k * inst.ball(i).c[0], k * inst.ball(i).c[1]});
  return c;
}

Chain2 polygon(Rng& rng, std::size_t p, double cx, double cy) {
  Chain2 c;
  for (std::size_t i = 0; i < p; ++i) c.push_back({cx + rng.uniform(-2, 2), cy + rng.uniform(-2, 2)});
  return c;
}

Chain3 chain3(Rng& rng, std::size_t p) {
  Chain3 c;
  for (std::size_t i = 0; i < p; ++i) c.push_back({rng.normal(), rng.normal(), rng.normal()});
  return c;
}

}  // namespace

TEST(Iocp, TwoTriangles) {
  const Graph g = oracle::disjoint_union(oracle::cycle(3), oracle::cycle(3));
  const auto w = find_two_anticomplete_odd_cycles(g);
  ASSERT_TRUE(w.found);
  EXPECT_TRUE(verify_witness(g, w));
  EXPECT_TRUE(w.exhaustive);
}

TEST(Iocp, TwoNineCycles) {
  const Graph g = oracle::disjoint_union(oracle::cycle(9), oracle::cycle(9));
  const auto w = find_two_anticomplete_odd_cycles(g);
  ASSERT_TRUE(w.found);
  EXPECT_EQ(w.first.size(), 9u);
  EXPECT_EQ(w.second.size(), 9u);
  EXPECT_TRUE(verify_witness(g, w));
}

TEST(Iocp, SingleOddCycleOrAdjacentPair) {
  EXPECT_FALSE(find_two_anticomplete_odd_cycles(oracle::cycle(7)).found);
  Graph g = oracle::disjoint_union(oracle::cycle(3), oracle::cycle(3));
  g.add_edge(0, 3);
  EXPECT_FALSE(find_two_anticomplete_odd_cycles(g).found);
}

TEST(Iocp, CapIsReported) {
  const Graph g = oracle::disjoint_union(oracle::cycle(9), oracle::cycle(9));
  const auto w = find_two_anticomplete_odd_cycles(g, 7);
  EXPECT_FALSE(w.found);
  EXPECT_FALSE(w.exhaustive);
  EXPECT_EQ(w.cap, 7u);
}

TEST(Iocp, AgreesWithEnumerationOnRandomGraphs) {
  // Reference: pairs of disjoint vertex sets that induce odd cycles with no edges between.
  Rng rng(12);
  int found = 0;
  for (int k = 0; k < 300; ++k) {
    const Graph g = oracle::random_graph(9, rng.uniform(0.15, 0.4), rng);
    const auto w = find_two_anticomplete_odd_cycles(g);
    bool ref = false;
    for (std::uint32_t a = 1; a < (1u << 9) && !ref; ++a) {
      if (std::popcount(a) % 2 == 0 || std::popcount(a) < 3) continue;
      auto ia = induced(g, to_bitset(9, [&] { VertexSet s; for (VertexId v = 0; v < 9; ++v) if (a >> v & 1) s.push_back(v); return s; }()));
      bool cyc = true;
      for (VertexId v = 0; v < ia.graph.size(); ++v) cyc = cyc && ia.graph.degree(v) == 2;
      if (!cyc || oracle::odd_girth(ia.graph) != ia.graph.size()) continue;
      Bitset na = closed_neighborhood(g, ia.to_parent);
      VertexSet rest;
      for (VertexId v = 0; v < 9; ++v)
        if (!na.test(v)) rest.push_back(v);
      ref = oracle::odd_girth(induced(g, rest).graph) != 0;
    }
    EXPECT_EQ(w.found, ref) << k;
    if (w.found) EXPECT_TRUE(verify_witness(g, w));
    found += w.found;
  }
  EXPECT_GT(found, 5);
}

TEST(Iocp, DiskComplementsHaveNoWitness) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = oracle::disk_instance(12, seed);
    EXPECT_FALSE(find_two_anticomplete_odd_cycles(complement(build_intersection_graph(inst).graph)).found) << seed;
  }
}

TEST(VcDimension, Examples) {
  EXPECT_EQ(vc_dimension(complement(Graph(5))), 1);
  EXPECT_EQ(vc_dimension(oracle::cycle(5)), 2);
  EXPECT_EQ(vc_dimension(Graph(4)), 0);
  EXPECT_THROW(vc_dimension(Graph(21)), CapExceeded);
}

// Open neighbourhoods of the complement are complements of closed ones, so the
// two dimensions can differ by one; four isolated vertices against K4 is the
// smallest example.
TEST(VcDimension, ComplementWithinOne) {
  EXPECT_EQ(vc_dimension(Graph(4)), 0);
  EXPECT_EQ(vc_dimension(complement(Graph(4))), 1);
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const Graph g = oracle::random_graph(1 + rng.below(11), rng.uniform(), rng);
    const int d = vc_dimension(g);
    EXPECT_EQ(d, oracle::vc_dimension(g));
    EXPECT_LE(std::abs(d - vc_dimension(complement(g))), 1);
  }
}

TEST(VcDimension, DiskGraphsAtMostFour) {
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    EXPECT_LE(vc_dimension(build_intersection_graph(oracle::disk_instance(12, seed)).graph), 4);
}

TEST(K22, DiagonalNonEdges) {
  // Four disks on a square; opposite corners do not meet.
  const std::array<Ball, 4> d{Ball{{0, 0}, 0.6}, Ball{{1, 0}, 0.6}, Ball{{1, 1}, 0.6}, Ball{{0, 1}, 0.6}};
  const auto v = check_k22_quadrilateral(d, {{{0, 2}, {1, 3}}});
  EXPECT_TRUE(v.convex);
  EXPECT_TRUE(v.diagonal_nonedges);
  EXPECT_TRUE(v.line_condition);
  EXPECT_TRUE(v.holds);
}

TEST(K22, CenterInsideTriangle) {
  // Disk 3 sits inside the triangle of the others and misses disk 0.
  const std::array<Ball, 4> d{Ball{{0, 0}, 2.2}, Ball{{4, 0}, 1.9}, Ball{{2, 3.5}, 1.9}, Ball{{2.6, 1.6}, 0.5}};
  ASSERT_FALSE(intersects(d[0], d[3]).yes);
  const auto v = check_k22_quadrilateral(d, {{{0, 3}, {1, 2}}});
  EXPECT_FALSE(v.convex);
  EXPECT_TRUE(v.line_condition);
  EXPECT_TRUE(v.holds);
}

TEST(K22, RejectsNonRealizations) {
  const std::array<Ball, 4> d{Ball{{0, 0}, 1}, Ball{{1, 0}, 1}, Ball{{1, 1}, 1}, Ball{{0, 1}, 1}};
  EXPECT_THROW(check_k22_quadrilateral(d, {{{0, 2}, {1, 3}}}), InputError);
  EXPECT_THROW(check_k22_quadrilateral(d, {{{0, 2}, {0, 3}}}), InputError);
}

TEST(K22, RandomRealizationsHold) {
  Rng rng(14);
  int accepted = 0;
  for (int tries = 0; accepted < 100 && tries < 2'000'000; ++tries) {
    std::array<Ball, 4> d;
    for (auto& b : d) b = Ball{{rng.uniform(0, 4), rng.uniform(0, 4)}, rng.uniform(0.3, 2)};
    const bool ok = !intersects(d[0], d[1]).yes && !intersects(d[2], d[3]).yes && intersects(d[0], d[2]).yes &&
                    intersects(d[0], d[3]).yes && intersects(d[1], d[2]).yes && intersects(d[1], d[3]).yes;
    if (!ok) continue;
    ++accepted;
    EXPECT_TRUE(check_k22_quadrilateral(d, {{{0, 1}, {2, 3}}}).holds);
  }
  EXPECT_EQ(accepted, 100);
}

TEST(Crossing, FarTriangles) {
  const auto cp = crossing_profile({{0, 0}, {1, 0}, {0.3, 1}}, {{10, 10.2}, {11, 10}, {10.4, 11.3}});
  EXPECT_TRUE(cp.invariants_hold());
  EXPECT_EQ(cp.sum_c, 0);
}

TEST(Crossing, InterleavedSquares) {
  const Chain2 a{{0, 0}, {2, 0.1}, {2.1, 2}, {0.05, 1.9}};
  const Chain2 b{{1, -1}, {3, 1.05}, {1.02, 3}, {-1, 0.97}};
  const auto cp = crossing_profile(a, b);
  EXPECT_TRUE(cp.invariants_hold());
  EXPECT_GT(cp.sum_c, 0);
  EXPECT_EQ(cp.sum_b, cp.sum_a2);
}

TEST(Crossing, MatchesExactRecount) {
  Rng rng(15);
  for (int k = 0; k < 200; ++k) {
    const auto a = polygon(rng, 3 + rng.below(7), 0, 0);
    const auto b = polygon(rng, 3 + rng.below(7), rng.uniform(-2, 2), rng.uniform(-2, 2));
    const auto cp = crossing_profile(a, b, k);
    const auto p = oracle::crossing_counts(cp.chain1, cp.chain2);
    const auto q = oracle::crossing_counts(cp.chain2, cp.chain1);
    EXPECT_EQ(cp.a, p.a);
    EXPECT_EQ(cp.b, p.b);
    EXPECT_EQ(cp.c, p.c);
    EXPECT_EQ(cp.a2, q.a);
    EXPECT_TRUE(cp.invariants_hold());
  }
}

TEST(Crossing, DegenerateInputIsPerturbed) {
  // A vertex of the second chain lies on a line of the first.
  const auto cp = crossing_profile({{0, 0}, {2, 0}, {1, 1}}, {{1, 0}, {3, -1}, {3, 1}});
  EXPECT_GT(cp.attempts, 0);
  EXPECT_TRUE(in_general_position(cp.chain1, cp.chain2));
  EXPECT_TRUE(cp.invariants_hold());
}

// Centers of a disk representation of the complement of C_s + C_t: every line
// through a segment of one chain relates to the other by a_i + b_i - c_i = t.
TEST(Crossing, CycleUnionRepresentations) {
  const std::vector<std::pair<std::vector<std::size_t>, std::optional<std::size_t>>> cases{
      {{4, 6}, std::nullopt}, {{6}, 5}, {{4}, 3}, {{8}, 7}, {{4, 4}, std::nullopt}};
  for (const auto& [evens, odd] : cases) {
    const auto r = realize_co_cycles_disks(evens, odd);
    const std::size_t s = evens[0], t = evens.size() > 1 ? evens[1] : *odd;
    const auto cp = crossing_profile(centers(r.instance, 0, s), centers(r.instance, s, t));
    EXPECT_TRUE(cp.invariants_hold());
    for (std::size_t i = 0; i < s; ++i) EXPECT_EQ(cp.a[i] + cp.b[i] - cp.c[i], static_cast<long>(t)) << s << "," << t;
    for (std::size_t j = 0; j < t; ++j) EXPECT_EQ(cp.a2[j] + cp.b2[j] - cp.c2[j], static_cast<long>(s)) << s << "," << t;
  }
}

TEST(Needle, EquatorForPlanarTriangle) {
  const Chain3 tri{{0, 0, 0}, {1, 0, 0}, {0.5, 0.8, 0}};
  const auto c = needle_curve(tri);
  EXPECT_TRUE(c.closed);
  EXPECT_TRUE(c.antipodal);
  for (const auto& d : c.samples) EXPECT_NEAR(d.z, 0, 1e-12);
}

TEST(Needle, ScaleInvariant) {
  const Chain3 tiny{{0, 0, 0}, {1e-6, 0, 0}, {0, 1e-6, 1e-6}};
  const auto c = needle_curve(tiny);
  EXPECT_TRUE(c.closed);
  EXPECT_TRUE(c.antipodal);
}

TEST(Needle, CurvesAreClosedAndOnTheNeedleSet) {
  Rng rng(16);
  for (int k = 0; k < 20; ++k) {
    const auto chain = chain3(rng, 3 + 2 * rng.below(3));
    const auto c = needle_curve(chain, 16);
    EXPECT_TRUE(c.closed);
    EXPECT_TRUE(c.antipodal);
    EXPECT_LT(angle_between(c.samples.front(), c.samples.back()), 1e-12);
    for (std::size_t i = 0; i < c.samples.size(); i += 7) EXPECT_LT(oracle::needle_distance(chain, c.samples[i]), 1e-9);
  }
}

TEST(Needle, EvenChainRejected) {
  EXPECT_THROW(needle_curve({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}), InputError);
}

TEST(Needle, IdenticalChains) {
  const Chain3 c{{0, 0, 0}, {1, 0.2, 0}, {0.3, 1, 0.4}};
  const auto m = common_needle_direction(c, c);
  ASSERT_TRUE(m.found);
  EXPECT_LE(m.error, kNeedleTolerance);
}

TEST(Needle, TranslatedTriangleSharesAnEquatorialDirection) {
  const Chain3 a{{0, 0, 0}, {1, 0, 0}, {0.5, 0.8, 0}};
  Chain3 b = a;
  for (auto& p : b) p.z += 3;
  const auto m = common_needle_direction(a, b);
  ASSERT_TRUE(m.found);
  EXPECT_NEAR(m.direction.z, 0, 1e-6);
  EXPECT_LE(oracle::needle_distance(a, m.direction), 1e-6);
  EXPECT_LE(oracle::needle_distance(b, m.direction), 1e-6);
}

TEST(Needle, RandomPairs) {
  Rng rng(17);
  for (int k = 0; k < 30; ++k) {
    const auto a = chain3(rng, 3 + 2 * rng.below(3)), b = chain3(rng, 3 + 2 * rng.below(3));
    const auto m = common_needle_direction(a, b);
    ASSERT_TRUE(m.found) << k;
    EXPECT_LE(oracle::needle_distance(a, m.direction), 1e-6);
    EXPECT_LE(oracle::needle_distance(b, m.direction), 1e-6);
  }
}
