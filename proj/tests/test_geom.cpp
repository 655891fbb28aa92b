#include <gtest/gtest.h>

#include "geoclique/errors.hpp"
#include "geoclique/geom.hpp"
#include "support/oracles.hpp"

using namespace geoclique;

namespace {

Ball disk(double x, double y, double r) { return Ball{{x, y}, r}; }

GeometricInstance disks(std::vector<Ball> b) {
  GeometricInstance inst;
  for (auto& d : b) inst.objects.push_back(d);
  return inst;
}

}  // namespace

TEST(Intersects, TangentUnitBallsAreMarginalEdges) {
  const auto r = intersects(Ball{{0, 0, 0}, 1}, Ball{{2, 0, 0}, 1});
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.slack, 0);
  EXPECT_TRUE(r.marginal);
}

TEST(Intersects, FarDisks) {
  const auto r = intersects(disk(0, 0, 1), disk(3, 0, 1));
  EXPECT_FALSE(r.yes);
  EXPECT_DOUBLE_EQ(r.slack, -1);
}

TEST(Intersects, Triangles) {
  const Triangle a{{{{0, 0}, {4, 0}, {2, 3}}}};
  const Triangle far{{{{10, 0}, {14, 0}, {12, 3}}}};
  const Triangle near{{{{1, 1}, {5, 1}, {3, 4}}}};
  EXPECT_FALSE(intersects(a, far).yes);
  EXPECT_TRUE(intersects(a, near).yes);
  EXPECT_FALSE(oracle::sampled_overlap(a, far));
  EXPECT_TRUE(oracle::sampled_overlap(a, near));
}

TEST(Intersects, MixedVariantsRejected) {
  EXPECT_THROW(intersects(disk(0, 0, 1), Triangle{{{{0, 0}, {1, 0}, {0, 1}}}}), InputError);
  EXPECT_THROW(intersects(disk(0, 0, 1), Ball{{0, 0, 0}, 1}), InputError);
  EXPECT_THROW(intersects(disk(NAN, 0, 1), disk(0, 0, 1)), InputError);
}

TEST(Intersects, BallsMatchSignOfSlack) {
  Rng rng(3);
  for (int k = 0; k < 2000; ++k) {
    const Ball a{{rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0, 4)}, rng.uniform(0.2, 2)};
    const Ball b{{rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0, 4)}, rng.uniform(0.2, 2)};
    const double d = std::sqrt(std::pow(a.c[0] - b.c[0], 2) + std::pow(a.c[1] - b.c[1], 2) +
                               std::pow(a.c[2] - b.c[2], 2));
    EXPECT_EQ(intersects(a, b).yes, d <= a.r + b.r);
    EXPECT_EQ(intersects(a, b).yes, intersects(b, a).yes);
  }
}

// Dense-sampling containment agrees with the predicate away from tangency.
class SamplingOracle : public ::testing::TestWithParam<ObjectKind> {};

TEST_P(SamplingOracle, AgreesAwayFromTangency) {
  GeneratorSpec s;
  s.kind = GetParam();
  s.n = 24;
  s.hi = 6;
  const GeometricInstance inst = generate_instance(s, 11);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < inst.size(); ++i)
    for (std::size_t j = i + 1; j < inst.size(); ++j) {
      const auto r = intersects(inst.objects[i], inst.objects[j]);
      EXPECT_EQ(r.yes, intersects(inst.objects[j], inst.objects[i]).yes);
      const bool sampled = oracle::sampled_overlap(inst.objects[i], inst.objects[j]);
      if (sampled) EXPECT_TRUE(r.yes) << i << "," << j;
      // A 100x100 grid can miss slivers, so only clear overlaps must be seen.
      if (r.yes && r.slack > 0.05) EXPECT_TRUE(sampled) << i << "," << j << " slack " << r.slack;
      if (!r.yes) EXPECT_FALSE(sampled);
      checked += std::abs(r.slack) > 1e-8;
    }
  EXPECT_GT(checked, 200u);
}

INSTANTIATE_TEST_SUITE_P(Planar, SamplingOracle, ::testing::Values(ObjectKind::kTriangles, ObjectKind::kEllipses));

TEST(Ellipse, DegeneratesToDisk) {
  const Ellipse a{{0, 0}, 1, 1, 0};
  const Ellipse b{{1.5, 0}, 1, 1, 0.3};
  const auto r = intersects(a, b);
  EXPECT_TRUE(r.yes);
  EXPECT_NEAR(r.slack, 0.5, 1e-9);
  EXPECT_FALSE(intersects(a, Ellipse{{2.5, 0}, 1, 1, 0}).yes);
}

TEST(Ellipse, RotatedNeedles) {
  // Two thin ellipses crossing like an X, and the same pair pulled apart.
  const Ellipse a{{0, 0}, 3, 0.1, 0.7};
  const Ellipse b{{0, 0}, 3, 0.1, -0.7};
  EXPECT_TRUE(intersects(a, b).yes);
  const Ellipse c{{0, 1}, 3, 0.1, 0};
  const Ellipse d{{0, 0}, 3, 0.1, 0};
  EXPECT_FALSE(intersects(c, d).yes);
  EXPECT_FALSE(oracle::sampled_overlap(c, d, 400));
}

TEST(IntersectionGraph, EquilateralTriangleOfUnitDisks) {
  const auto built = build_intersection_graph(disks({disk(0, 0, 1), disk(1, 0, 1), disk(0.5, std::sqrt(3) / 2, 1)}));
  EXPECT_EQ(built.graph.edge_count(), 3u);
}

TEST(IntersectionGraph, FarApartIsEdgeless) {
  std::vector<Ball> b;
  for (int i = 0; i < 8; ++i) b.push_back(disk(10.0 * i, 0, 1));
  EXPECT_EQ(build_intersection_graph(disks(b)).graph.edge_count(), 0u);
}

TEST(IntersectionGraph, ThirteenDisksThroughTheOrigin) {
  std::vector<Ball> b;
  for (int i = 0; i < 13; ++i) {
    const double t = 2 * M_PI * i / 13, r = 1 + 0.1 * i;
    b.push_back(disk(0.9 * r * std::cos(t), 0.9 * r * std::sin(t), r));
  }
  EXPECT_EQ(build_intersection_graph(disks(b)).graph.edge_count(), 78u);
}

TEST(IntersectionGraph, ReportsMarginalPairs) {
  const auto built = build_intersection_graph(disks({disk(0, 0, 1), disk(2, 0, 1), disk(9, 9, 1)}));
  ASSERT_EQ(built.report.marginal.size(), 1u);
  EXPECT_EQ(built.report.marginal[0].u, 0u);
  EXPECT_EQ(built.report.marginal[0].v, 1u);
  EXPECT_EQ(built.report.min_abs_slack, 0);
}

TEST(MakeProper, TangentPairGainsOverlap) {
  const GeometricInstance inst = disks({disk(0, 0, 1), disk(2, 0, 1)});
  const GeometricInstance p = make_proper(inst);
  EXPECT_GT(p.ball(0).r + p.ball(1).r, 2);
  EXPECT_EQ(build_intersection_graph(p).graph, build_intersection_graph(inst).graph);
  EXPECT_TRUE(build_intersection_graph(p).report.marginal.empty());
}

TEST(MakeProper, AlreadyProperIsUnchanged) {
  const GeometricInstance inst = oracle::disk_instance(10, 4);
  ASSERT_TRUE(build_intersection_graph(inst).report.marginal.empty());
  EXPECT_EQ(make_proper(inst), inst);
}

TEST(MakeProper, EngineeredTangencyPreservesGraph) {
  GeometricInstance inst = oracle::disk_instance(10, 21);
  // Disks 3 and 7 touch exactly; the coordinates are representable.
  std::get<Ball>(inst.objects[3]) = disk(2.5, 2, 1.25);
  std::get<Ball>(inst.objects[7]) = disk(4.25, 2, 0.5);
  const auto before = build_intersection_graph(inst);
  ASSERT_FALSE(before.report.marginal.empty());
  const auto after = build_intersection_graph(make_proper(inst));
  EXPECT_EQ(after.graph, before.graph);
  EXPECT_TRUE(after.report.marginal.empty());
}

TEST(GeneralPosition, CollinearTripleIsBroken) {
  const GeometricInstance inst = disks({disk(0, 0, 1.2), disk(1, 0, 1.2), disk(2, 0, 1.2)});
  ASSERT_EQ(count_collinear_center_triples(inst), 1u);
  const GeometricInstance p = perturb_general_position(inst, 5);
  EXPECT_EQ(count_collinear_center_triples(p), 0u);
  EXPECT_EQ(build_intersection_graph(p).graph, build_intersection_graph(inst).graph);
}

TEST(GeneralPosition, NothingToDo) {
  const GeometricInstance inst = disks({disk(0, 0, 1), disk(1, 0.1, 1), disk(2, 0.5, 1)});
  EXPECT_EQ(perturb_general_position(inst, 5), inst);
}

TEST(GeneralPosition, FourCollinearCenters) {
  GeometricInstance inst = oracle::disk_instance(12, 9);
  for (int k = 0; k < 4; ++k) std::get<Ball>(inst.objects[k]).c = {1.0 + k, 2.0 + 0.5 * k};
  ASSERT_GE(count_collinear_center_triples(inst), 4u);
  const GeometricInstance p = perturb_general_position(inst, 1);
  // Exhaustive exact orientation over every triple.
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        auto c = [&](std::size_t t) { return Vec2{p.ball(t).c[0], p.ball(t).c[1]}; };
        EXPECT_NE(oracle::orient(c(i), c(j), c(k)), 0);
      }
  EXPECT_EQ(build_intersection_graph(p).graph, build_intersection_graph(inst).graph);
}

TEST(GeneralPosition, RejectsImproperInput) {
  EXPECT_THROW(perturb_general_position(disks({disk(0, 0, 1), disk(2, 0, 1)}), 1), InputError);
}

TEST(Generator, Deterministic) {
  GeneratorSpec s;
  s.dim = 3;
  s.n = 10;
  s.hi = 4;
  const auto a = generate_instance(s, 7), b = generate_instance(s, 7);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.ball(i).r, 1);
  EXPECT_NE(generate_instance(s, 8), a);
}

TEST(Generator, EmptyInstance) {
  GeneratorSpec s;
  s.rmin = 1;
  s.rmax = 2;
  EXPECT_EQ(generate_instance(s, 1).size(), 0u);
}

TEST(Generator, InvalidSpec) {
  GeneratorSpec s;
  s.rmin = 2;
  s.rmax = 1;
  EXPECT_THROW(generate_instance(s, 1), InputError);
}

TEST(InstanceJson, RoundTripEveryKind) {
  for (auto kind : {ObjectKind::kBalls, ObjectKind::kTriangles, ObjectKind::kEllipses}) {
    GeneratorSpec s;
    s.kind = kind;
    s.n = 12;
    const auto inst = generate_instance(s, 13);
    const auto back = load_instance(save_instance(inst));
    EXPECT_EQ(back, inst);
    EXPECT_EQ(build_intersection_graph(back).graph, build_intersection_graph(inst).graph);
  }
}

TEST(InstanceJson, DimensionMismatchNamesTheObject) {
  const std::string bad = R"({"kind":"balls","dim":2,"objects":[{"c":[0,0],"r":1},{"c":[0,0,0],"r":1}]})";
  try {
    load_instance(bad);
    FAIL() << "expected an error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("objects[1]"), std::string::npos) << e.what();
  }
}

TEST(InstanceJson, SchemaErrors) {
  EXPECT_THROW(load_instance("{"), InputError);
  EXPECT_THROW(load_instance(R"({"kind":"cubes","dim":2,"objects":[]})"), InputError);
  EXPECT_THROW(load_instance(R"({"kind":"balls","dim":2,"objects":[{"c":[0,0],"r":-1}]})"), InputError);
}
