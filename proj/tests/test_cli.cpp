#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "geoclique/gadget.hpp"
#include "geoclique/graph_io.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

using namespace geoclique;
using nlohmann::json;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "geoclique");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int rc = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {rc, out.str(), err.str()};
}

std::string graph_json(const Graph& g) { return save_graph_json(g); }

}  // namespace

TEST(Cli, GenIsSeeded) {
  const auto a = run({"gen", "--kind", "disks", "--n", "12", "--seed", "5"});
  const auto b = run({"gen", "--kind", "disks", "--n", "12", "--seed", "5"});
  const auto c = run({"gen", "--kind", "disks", "--n", "12", "--seed", "6"});
  ASSERT_EQ(a.rc, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(load_instance(a.out).size(), 12u);
}

TEST(Cli, SeedFromEnvironment) {
  const auto base = run({"gen", "--kind", "unit-balls", "--n", "5", "--seed", "9"});
  ::setenv("GEOCLIQUE_SEED", "9", 1);
  const auto env = run({"gen", "--kind", "unit-balls", "--n", "5"});
  ::unsetenv("GEOCLIQUE_SEED");
  EXPECT_EQ(base.out, env.out);
  EXPECT_EQ(load_instance(env.out).dim, 3);
}

TEST(Cli, CliqueMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = save_instance(oracle::disk_instance(14, seed, 1.3));
    const double w = oracle::omega(build_intersection_graph(load_instance(inst)).graph);
    for (const char* mode : {"exact", "subexp"}) {
      const auto r = run({"clique", "-", "--mode", mode}, inst);
      ASSERT_EQ(r.rc, 0) << r.err;
      EXPECT_EQ(json::parse(r.out)["value"].get<double>(), w);
    }
    const auto e = run({"clique", "-", "--seed", std::to_string(seed)}, inst);
    EXPECT_GE(json::parse(e.out)["value"].get<double>(), std::ceil(0.75 * w));
  }
}

TEST(Cli, UnitBallClassIsAuto) {
  const auto inst = save_instance(oracle::unit_ball_instance(10, 4));
  const auto r = run({"clique", "-"}, inst);
  ASSERT_EQ(r.rc, 0) << r.err;
  EXPECT_NE(json::parse(r.out)["method"].get<std::string>().find("unit_ball"), std::string::npos);
}

TEST(Cli, MisExactOnDimacs) {
  const auto r = run({"mis", "-", "--mode", "exact"}, "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  ASSERT_EQ(r.rc, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["value"].get<double>(), 2);
}

TEST(Cli, NonDiskGraphExitsWithEvidence) {
  Graph g = complement(oracle::disjoint_union(oracle::disjoint_union(oracle::cycle(3), oracle::cycle(3)), Graph(1)));
  const auto r = run({"clique", "-"}, graph_json(g));
  EXPECT_EQ(r.rc, cli::kExitInvariant);
  const auto e = json::parse(r.err);
  EXPECT_EQ(e["first"].size(), 3u);
  EXPECT_EQ(e["second"].size(), 3u);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"mis", "-"}, "{\"n\":3,\"edges\":[[0,1]").rc, cli::kExitInput);
  EXPECT_EQ(run({"mis", "-", "--eps", "2"}, graph_json(oracle::cycle(5))).rc, cli::kExitInput);
  EXPECT_EQ(run({"mis", "/nonexistent/file.json"}).rc, cli::kExitInput);
  EXPECT_EQ(run({"frobnicate"}).rc, cli::kExitInput);
  const auto bad = run({"graph", "-"}, R"({"kind":"balls","dim":2,"objects":[{"c":[0,0],"r":1},{"c":[1],"r":1}]})");
  EXPECT_EQ(bad.rc, cli::kExitInput);
  EXPECT_NE(bad.err.find("objects[1]"), std::string::npos);
}

TEST(Cli, GraphFormats) {
  const auto inst = save_instance(oracle::disk_instance(9, 2));
  const Graph g = build_intersection_graph(load_instance(inst)).graph;
  const auto dimacs = run({"graph", "-", "--format", "dimacs"}, inst);
  ASSERT_EQ(dimacs.rc, 0);
  EXPECT_EQ(load_dimacs(dimacs.out), g);
  const auto js = run({"graph", "-"}, inst);
  EXPECT_EQ(load_graph_json(js.out), g);
}

TEST(Cli, GadgetThenVerify) {
  for (const char* target : {"balls4", "triangles", "ellipses"}) {
    const std::string k3 = graph_json(complement(Graph(3)));
    const auto tmp = std::filesystem::temp_directory_path() / "geoclique_k3.json";
    { std::ofstream(tmp) << k3; }
    const auto g = run({"gadget", "--target", target, "--graph", tmp.string()});
    ASSERT_EQ(g.rc, 0) << g.err;
    const auto v = run({"verify", "-"}, g.out);
    EXPECT_EQ(v.rc, 0) << v.out;
    EXPECT_TRUE(json::parse(v.out)["equal"].get<bool>());

    // Pull two objects far apart: an expected edge disappears.
    auto bundle = json::parse(g.out);
    auto& objs = bundle["instance"]["objects"];
    if (objs[0].contains("c")) {
      for (auto& x : objs[0]["c"]) x = x.get<double>() + 1e3;
    } else {
      for (auto& p : objs[0]["p"]) p[0] = p[0].get<double>() + 1e3;
    }
    EXPECT_EQ(run({"verify", "-"}, bundle.dump()).rc, cli::kExitInvariant);
  }
}

TEST(Cli, CoCyclesGadget) {
  const auto g = run({"gadget", "--target", "cocycles", "--cycles", "4,6,5"});
  ASSERT_EQ(g.rc, 0) << g.err;
  EXPECT_EQ(json::parse(g.out)["instance"]["objects"].size(), 15u);
  EXPECT_EQ(run({"gadget", "--target", "cocycles", "--cycles", "3,5"}).rc, cli::kExitInput);
}

TEST(Cli, ChecksReportAndExit) {
  const auto iocp = run({"check", "--property", "iocp", "-"},
                        graph_json(oracle::disjoint_union(oracle::cycle(3), oracle::cycle(5))));
  ASSERT_EQ(iocp.rc, 0) << iocp.err;
  EXPECT_TRUE(json::parse(iocp.out)["found"].get<bool>());
  const auto vc = run({"check", "--property", "vcdim", "-"}, graph_json(oracle::cycle(6)));
  ASSERT_EQ(vc.rc, 0) << vc.err;
  EXPECT_EQ(json::parse(vc.out)["vcdim"].get<int>(), oracle::vc_dimension(oracle::cycle(6)));
}

TEST(Cli, BenchIsReproducible) {
  const std::vector<std::string> args{"bench", "--count", "3", "--n", "10", "--modes", "eptas,exact", "--seed", "4"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.rc, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto row = json::parse(line);
    EXPECT_FALSE(row.contains("ms"));
    EXPECT_TRUE(row["valid"].get<bool>());
    ++rows;
  }
  EXPECT_EQ(rows, 6);
}
