#include "geoclique/clique.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "geoclique/rng.hpp"

namespace geoclique {

namespace {

void check_cfg(const PipelineConfig& cfg) {
  if (!(cfg.eps > 0 && cfg.eps < 1)) throw InputError("eps must lie in (0, 1)");
  if (cfg.beta && !(*cfg.beta > 0 && *cfg.beta <= 1)) throw InputError("beta must lie in (0, 1]");
}

SolveResult branch_all(const Graph& g, const PipelineConfig& cfg, double beta, const std::string& name) {
  check_cfg(cfg);
  SolveResult best;
  best.objective = Objective::kClique;
  best.seed = cfg.seed;
  best.method = name;
  if (cfg.mode == CliqueMode::kExact) {
    best.set = brute_force(g, Objective::kClique, cfg.exact_cap);
    best.value = g.weight_of(best.set);
    best.method += "/exact";
    best.paths.brute_force = 1;
    return best;
  }
  if (cfg.mode == CliqueMode::kPierce2) throw InputError(name + ": pierce2 needs a disk representation");
  best.method += cfg.mode == CliqueMode::kSubexp ? "/subexp" : "/eptas";
  const EptasParams params =
      derive_params(cfg.eps, cfg.beta.value_or(beta), kNeighborhoodVcDim, 1, cfg.params, cfg.s_override, cfg.t_override);
  EptasOptions opt;
  opt.threads = cfg.threads;
  for (VertexId u = 0; u < g.size(); ++u) {
    Bitset nu = g.neighbors(u);
    nu.set(u);
    if (!best.set.empty() && g.weight_of(nu) <= best.value) {
      ++best.paths.skipped;
      continue;
    }
    const InducedSubgraph local = induced(g, nu);
    const Graph comp = complement(local.graph);
    SolveResult r;
    try {
      r = cfg.mode == CliqueMode::kSubexp ? mis_subexp(comp, cfg.exact_cap)
                                          : mis_eptas(comp, params, splitmix64(cfg.seed + u), opt);
    } catch (const IocpViolation& e) {
      throw IocpViolation(local.lift(e.first()), local.lift(e.second()),
                          name + ": input is not a " + (name == "clique_disk" ? "disk" : "unit ball") +
                              " graph (complement of a closed neighborhood has two anticomplete odd cycles)");
    }
    best.trials += r.trials;
    best.paths += r.paths;
    if (best.set.empty() || r.value > best.value) {
      best.set = local.lift(r.set);
      std::sort(best.set.begin(), best.set.end());
      best.value = r.value;
      best.best_trial = static_cast<long>(u);
    }
  }
  if (!is_clique(g, best.set)) throw std::logic_error(name + ": returned set is not a clique");
  best.value = g.weight_of(best.set);
  return best;
}

Graph graph_of(const GeometricInstance& inst, ObjectKind kind, int dim, const std::string& name) {
  if (inst.kind != kind) throw InputError(name + ": wrong object kind " + to_string(inst.kind));
  if (inst.dim != dim) throw InputError(name + ": expected dimension " + std::to_string(dim));
  validate(inst);
  return build_intersection_graph(inst).graph;
}

}  // namespace

SolveResult clique_disk(const Graph& g, const PipelineConfig& cfg) {
  return branch_all(g, cfg, cfg.representation ? kDiskBetaRep : kDiskBetaNoRep, "clique_disk");
}

SolveResult clique_disk(const GeometricInstance& inst, PipelineConfig cfg) {
  if (cfg.mode == CliqueMode::kPierce2) return clique_pierce2(inst, cfg.seed, cfg.pierce_cap);
  cfg.representation = true;
  return clique_disk(graph_of(inst, ObjectKind::kBalls, 2, "clique_disk"), cfg);
}

SolveResult clique_unit_ball(const Graph& g, const PipelineConfig& cfg) {
  return branch_all(g, cfg, kUnitBallBeta, "clique_unit_ball");
}

SolveResult clique_unit_ball(const GeometricInstance& inst, PipelineConfig cfg) {
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (inst.kind == ObjectKind::kBalls && std::abs(inst.ball(i).r - 1) > 1e-12)
      throw InputError("clique_unit_ball: $.objects[" + std::to_string(i) + "].r is not 1");
  cfg.representation = true;
  return clique_unit_ball(graph_of(inst, ObjectKind::kBalls, 3, "clique_unit_ball"), cfg);
}

std::vector<Vec2> circle_intersections(const Ball& a, const Ball& b) {
  const Vec2 ca{a.c[0], a.c[1]}, cb{b.c[0], b.c[1]};
  const Vec2 d = cb - ca;
  const double dist = norm(d);
  if (dist == 0 || dist > a.r + b.r || dist < std::abs(a.r - b.r)) return {};
  const double x = (dist * dist + a.r * a.r - b.r * b.r) / (2 * dist);
  const double h = std::sqrt(std::max(0.0, a.r * a.r - x * x));
  const Vec2 u = (1 / dist) * d, perp{-u.y, u.x};
  const Vec2 m = ca + x * u;
  if (h == 0) return {m};
  return {m + h * perp, m - h * perp};
}

SolveResult clique_pierce2(const GeometricInstance& inst, std::uint64_t seed, std::size_t cap) {
  const Graph g = graph_of(inst, ObjectKind::kBalls, 2, "clique_pierce2");
  const std::size_t n = g.size();
  SolveResult res;
  res.objective = Objective::kClique;
  res.method = "clique_pierce2";
  res.seed = seed;
  if (n == 0) return res;

  std::vector<Vec2> cand;
  for (std::size_t i = 0; i < n; ++i) cand.push_back({inst.ball(i).c[0], inst.ball(i).c[1]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(i, j))
        for (auto p : circle_intersections(inst.ball(i), inst.ball(j))) cand.push_back(p);

  // Hit sets, deduplicated. A set hit by a point is a clique of G.
  std::set<std::vector<VertexId>> seen;
  std::vector<Bitset> hits;
  for (auto p : cand) {
    Bitset h(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Ball& b = inst.ball(i);
      if (norm(p - Vec2{b.c[0], b.c[1]}) <= b.r + 1e-9 * (1 + b.r)) h.set(i);
    }
    std::vector<VertexId> key = h.to_vector();
    std::vector<VertexId> clique;
    for (auto v : key) {
      bool ok = true;
      for (auto w : clique) ok = ok && g.adjacent(v, w);
      if (ok) clique.push_back(v);
    }
    if (clique.size() != key.size()) h = to_bitset(n, clique);
    if (seen.insert(h.to_vector()).second) hits.push_back(h);
  }

  auto evaluate = [&](std::size_t a, std::size_t b) {
    const InducedSubgraph sub = induced(g, hits[a] | hits[b]);
    VertexSet s = sub.lift(mis_bipartite(complement(sub.graph)));
    const double v = g.weight_of(s);
    if (res.set.empty() || v > res.value) {
      std::sort(s.begin(), s.end());
      res.set = std::move(s);
      res.value = v;
    }
    ++res.trials;
  };
  const std::size_t P = hits.size();
  const std::size_t pairs = P * (P + 1) / 2;
  if (pairs <= cap) {
    for (std::size_t a = 0; a < P; ++a)
      for (std::size_t b = a; b < P; ++b) evaluate(a, b);
  } else {
    res.heuristic = true;
    Rng rng(seed);
    for (std::size_t k = 0; k < cap; ++k) evaluate(rng.below(P), rng.below(P));
  }
  if (!is_clique(g, res.set)) throw std::logic_error("clique_pierce2: returned set is not a clique");
  return res;
}

}  // namespace geoclique
