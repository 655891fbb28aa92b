#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "geoclique/mis.hpp"
#include "geoclique/rng.hpp"

namespace geoclique {

std::string to_json(const SolveResult& r) {
  nlohmann::json j;
  j["value"] = r.value;
  j["set"] = r.set;
  j["trials"] = r.trials;
  j["paths"] = {{"bipartite", r.paths.bipartite},
                {"short", r.paths.short_cycle},
                {"long", r.paths.long_cycle},
                {"skipped", r.paths.skipped},
                {"brute_force", r.paths.brute_force}};
  j["seed"] = r.seed;
  j["method"] = r.method;
  j["objective"] = r.objective == Objective::kMis ? "mis" : "clique";
  j["best_trial"] = r.best_trial;
  if (!r.cover.empty()) j["cover"] = r.cover;
  j["heuristic"] = r.heuristic;
  return j.dump();
}

void certify_independent(const Graph& g, SolveResult& r) {
  std::sort(r.set.begin(), r.set.end());
  if (!is_independent(g, r.set)) throw std::logic_error(r.method + ": returned set is not independent");
  r.value = g.weight_of(r.set);
}

VertexSet LayerDecomposition::stratum(std::size_t k, std::size_t l) const {
  VertexSet out;
  if (k == 0 || k > layers.size()) return out;
  for (auto w : layers[k - 1])
    if (stratum_of[w] == static_cast<long>(l)) out.push_back(w);
  return out;
}

LayerDecomposition decompose_layers(const Graph& g, const std::vector<VertexId>& cycle, const EptasParams& params) {
  if (cycle.size() <= static_cast<std::size_t>(params.c))
    throw InputError("decompose_layers: cycle of length " + std::to_string(cycle.size()) +
                     " is not longer than c = " + std::to_string(params.c));
  if (!is_odd_cycle(g, cycle)) throw InputError("decompose_layers: not an odd cycle of the graph");
  const std::size_t n = g.size();
  LayerDecomposition D;
  D.cycle = cycle;
  D.g = cycle.size();
  Layers L = bfs_layers(g, cycle);
  D.layers = std::move(L.layers);
  D.lambda = D.layers.size();
  D.unreached = std::move(L.unreached);
  D.layer_of.assign(n, -1);
  D.stratum_of.assign(n, -1);
  for (std::size_t j = 0; j < D.g; ++j) {
    D.layer_of[cycle[j]] = 0;
    D.stratum_of[cycle[j]] = static_cast<long>(j + 1);
  }
  // The minimum endpoint index over shortest paths is the minimum over
  // neighbours one layer closer.
  for (std::size_t k = 1; k <= D.lambda; ++k)
    for (auto w : D.layers[k - 1]) {
      D.layer_of[w] = static_cast<int>(k);
      long best = -1;
      g.neighbors(w).for_each([&](std::size_t u) {
        if (D.layer_of[u] == static_cast<int>(k) - 1 && (best < 0 || D.stratum_of[u] < best)) best = D.stratum_of[u];
      });
      D.stratum_of[w] = best;
    }

  auto weight_of = [&](const VertexSet& s) { return g.weight_of(s); };
  D.light_layer = 1;
  double best_w = -1;
  for (long long k = 1; k <= params.layer_budget; ++k) {
    const double w = static_cast<std::size_t>(k) <= D.lambda ? weight_of(D.layers[k - 1]) : 0.0;
    if (best_w < 0 || w < best_w) {
      best_w = w;
      D.light_layer = static_cast<std::size_t>(k);
    }
  }
  D.h2 = cycle;
  for (std::size_t k = 1; k < D.light_layer && k <= D.lambda; ++k)
    D.h2.insert(D.h2.end(), D.layers[k - 1].begin(), D.layers[k - 1].end());
  std::sort(D.h2.begin(), D.h2.end());

  const auto z = static_cast<std::size_t>(params.z);
  D.blocks.assign(static_cast<std::size_t>(params.block_max) + 1, {});
  for (auto w : D.h2) {
    const auto j = static_cast<std::size_t>(D.stratum_of[w]);
    const std::size_t gamma = (j - 1) / z;
    if (gamma < D.blocks.size()) D.blocks[gamma].push_back(w);
  }
  best_w = -1;
  for (std::size_t gamma = 0; gamma < D.blocks.size(); ++gamma) {
    if (gamma * z + 1 > D.g) break;
    const double w = weight_of(D.blocks[gamma]);
    if (best_w < 0 || w < best_w) {
      best_w = w;
      D.light_block = gamma;
    }
  }
  return D;
}

namespace {

VertexSet sample_uniform(std::size_t n, std::size_t s, Rng& rng) {
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t k = 0; k < s; ++k) std::swap(pool[k], pool[k + rng.below(n - k)]);
  VertexSet out(pool.begin(), pool.begin() + static_cast<long>(s));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet sample_weighted(const Graph& g, std::size_t s, Rng& rng) {
  const std::size_t n = g.size();
  std::vector<bool> taken(n, false);
  VertexSet out;
  for (std::size_t k = 0; k < s; ++k) {
    double total = 0;
    for (VertexId v = 0; v < n; ++v)
      if (!taken[v]) total += g.weight(v);
    VertexId pick = n;
    if (total > 0) {
      double x = rng.uniform() * total;
      for (VertexId v = 0; v < n; ++v) {
        if (taken[v] || g.weight(v) <= 0) continue;
        pick = v;
        x -= g.weight(v);
        if (x < 0) break;
      }
    } else {
      std::size_t idx = rng.below(n - k);
      for (VertexId v = 0; v < n; ++v)
        if (!taken[v] && idx-- == 0) {
          pick = v;
          break;
        }
    }
    taken[pick] = true;
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All independent s-subsets in lexicographic order.
void independent_subsets(const Graph& g, std::size_t s, std::size_t from, VertexSet& cur,
                         std::vector<VertexSet>& out) {
  if (cur.size() == s) {
    out.push_back(cur);
    return;
  }
  for (VertexId v = from; v < g.size(); ++v) {
    bool ok = true;
    for (auto u : cur)
      if (g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    independent_subsets(g, s, v + 1, cur, out);
    cur.pop_back();
  }
}

struct TrialOutcome {
  VertexSet set;  // ids of the graph the trial ran on
  double value = -1;
  PathCounts paths;
  bool done = false;
};

class Algorithm {
 public:
  Algorithm(const EptasParams& p, const EptasOptions& opt) : p_(p), opt_(opt) {}

  // top maps ids of h to ids of the caller's graph (used for evidence).
  SolveResult run(const Graph& h, const std::vector<VertexId>& top, int level, std::uint64_t seed,
                  const std::optional<VertexSet>& injected) const {
    const std::size_t n = h.size();
    SolveResult res;
    res.seed = seed;
    res.method = level > 1 ? "iocp_recursive" : "eptas";
    const long long s = p_.sample_size(n);
    if (!injected && p_.beta * static_cast<double>(n) < 2.0 * static_cast<double>(s)) {
      res.set = brute_force(h, Objective::kMis, opt_.brute_force_cap);
      res.paths.brute_force = 1;
      res.trials = 0;
      res.value = h.weight_of(res.set);
      return res;
    }

    std::vector<VertexSet> fixed_samples;
    std::size_t trials;
    if (injected) {
      trials = 1;
    } else if (p_.mode == ParamMode::kDeterministic) {
      if (s > kDeterministicMaxS) throw InputError("deterministic mode supports sample sizes up to 3");
      VertexSet cur;
      independent_subsets(h, static_cast<std::size_t>(s), 0, cur, fixed_samples);
      trials = fixed_samples.size();
    } else {
      trials = static_cast<std::size_t>(p_.trials());
    }

    std::vector<TrialOutcome> outcomes(trials);
    std::vector<std::exception_ptr> errors(trials);
    auto work = [&](std::size_t k) {
      try {
        VertexSet S;
        if (injected) S = *injected;
        else if (!fixed_samples.empty()) S = fixed_samples[k];
        else {
          Rng rng = Rng::stream(seed, k);
          S = h.weighted() ? sample_weighted(h, static_cast<std::size_t>(s), rng)
                           : sample_uniform(n, static_cast<std::size_t>(s), rng);
        }
        outcomes[k] = trial(h, top, level, S, splitmix64(seed ^ (k + 1) * 0x9e3779b97f4a7c15ULL));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(opt_.threads, trials));
    if (threads == 1) {
      for (std::size_t k = 0; k < trials; ++k) {
        work(k);
        if (errors[k]) break;
      }
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t k = w; k < trials; k += threads) work(k);
        });
      for (auto& th : pool) th.join();
    }
    // Reduce in trial order so the outcome matches a sequential run.
    res.trials = trials;
    for (std::size_t k = 0; k < trials; ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
      res.paths += outcomes[k].paths;
      if (outcomes[k].done && (res.best_trial < 0 || outcomes[k].value > res.value)) {
        res.value = outcomes[k].value;
        res.set = outcomes[k].set;
        res.best_trial = static_cast<long>(k);
      }
    }
    if (res.best_trial < 0) res.value = 0;  // every trial skipped: the empty set
    return res;
  }

 private:
  TrialOutcome trial(const Graph& h, const std::vector<VertexId>& top, int level, const VertexSet& S,
                     std::uint64_t subseed) const {
    TrialOutcome out;
    for (auto v : S)
      if (v >= h.size()) throw InputError("sample vertex out of range");
    if (!is_independent(h, S)) {
      out.paths.skipped = 1;
      return out;
    }
    Bitset keep = h.all() - closed_neighborhood(h, S);
    InducedSubgraph hp = induced(h, keep);
    std::vector<VertexId> top_hp(hp.to_parent.size());
    for (std::size_t i = 0; i < top_hp.size(); ++i) top_hp[i] = top[hp.to_parent[i]];
    VertexSet sol = S;
    auto add = [&](const VertexSet& local) {
      for (auto v : local) sol.push_back(hp.to_parent[v]);
    };

    auto cyc = shortest_odd_cycle(hp.graph);
    if (!cyc) {
      out.paths.bipartite = 1;
      add(mis_bipartite(hp.graph));
    } else if (cyc->size() <= static_cast<std::size_t>(p_.c)) {
      out.paths.short_cycle = 1;
      Bitset rest = hp.graph.all() - closed_neighborhood(hp.graph, *cyc);
      add(residual(hp.graph, top_hp, rest, *cyc, level, subseed));
    } else {
      out.paths.long_cycle = 1;
      LayerDecomposition D = decompose_layers(hp.graph, *cyc, p_);
      Bitset far(hp.graph.size());
      for (std::size_t k = D.light_layer + 1; k <= D.lambda; ++k)
        for (auto w : D.layers[k - 1]) far.set(w);
      for (auto w : D.unreached) far.set(w);
      add(residual(hp.graph, top_hp, far, *cyc, level, subseed));
      add(block_part(hp.graph, top_hp, D));
    }
    std::sort(sol.begin(), sol.end());
    if (!is_independent(h, sol)) throw std::logic_error("eptas trial produced a dependent set");
    out.value = h.weight_of(sol);
    out.set = std::move(sol);
    out.done = true;
    return out;
  }

  // Solves h[part], which must be bipartite at level 1.
  VertexSet residual(const Graph& h, const std::vector<VertexId>& top, const Bitset& part,
                     const std::vector<VertexId>& cycle, int level, std::uint64_t seed) const {
    InducedSubgraph sub = induced(h, part);
    auto chk = two_color(sub.graph);
    if (chk.bipartite()) return sub.lift(mis_bipartite(sub.graph, *chk.coloring));
    if (level > 1) {
      std::vector<VertexId> top_sub(sub.to_parent.size());
      for (std::size_t i = 0; i < top_sub.size(); ++i) top_sub[i] = top[sub.to_parent[i]];
      SolveResult inner = run(sub.graph, top_sub, level - 1, seed, std::nullopt);
      return sub.lift(inner.set);
    }
    auto other = *shortest_odd_cycle(sub.graph);
    std::vector<VertexId> a, b;
    for (auto v : cycle) a.push_back(top[v]);
    for (auto v : other) b.push_back(top[sub.to_parent[v]]);
    throw IocpViolation(a, b);
  }

  // H'' minus the lightest block, 2-coloured along the remaining cycle path.
  VertexSet block_part(const Graph& h, const std::vector<VertexId>& top, const LayerDecomposition& D) const {
    const std::size_t z = static_cast<std::size_t>(p_.z);
    const std::size_t lo = D.light_block * z + 1, hi = std::min(D.g, (D.light_block + 1) * z);
    std::vector<int> vcolor(D.g + 1, -1);
    int c = 0;
    for (std::size_t j = hi + 1; j <= D.g; ++j, c ^= 1) vcolor[j] = c;
    for (std::size_t j = 1; j < lo; ++j, c ^= 1) vcolor[j] = c;
    Bitset in_block = to_bitset(h.size(), D.blocks[D.light_block]);
    VertexSet bverts;
    for (auto w : D.h2)
      if (!in_block.test(w)) bverts.push_back(w);
    InducedSubgraph B = induced(h, bverts);
    TwoColoring col;
    col.color.resize(bverts.size());
    for (std::size_t i = 0; i < bverts.size(); ++i) {
      const VertexId w = B.to_parent[i];
      col.color[i] = vcolor[static_cast<std::size_t>(D.stratum_of[w])] ^ (D.layer_of[w] & 1);
    }
    for (auto [u, v] : B.graph.edges())
      if (col.color[u] == col.color[v]) throw ColoringClaimViolation({top[B.to_parent[u]], top[B.to_parent[v]]});
    return B.lift(mis_bipartite(B.graph, col));
  }

  EptasParams p_;
  EptasOptions opt_;
};

SolveResult finish(const Graph& g, SolveResult r) {
  certify_independent(g, r);
  return r;
}

}  // namespace

SolveResult mis_eptas(const Graph& g, const EptasParams& params, std::uint64_t seed, const EptasOptions& opt) {
  if (opt.injected_sample) {
    for (auto v : *opt.injected_sample)
      if (v >= g.size()) throw InputError("injected sample vertex out of range");
    if (!is_independent(g, *opt.injected_sample)) throw InputError("injected sample is not independent");
  }
  std::vector<VertexId> top(g.size());
  std::iota(top.begin(), top.end(), 0);
  Algorithm alg(params, opt);
  SolveResult r = alg.run(g, top, 1, seed, opt.injected_sample);
  r.method = "eptas";
  return finish(g, std::move(r));
}

SolveResult mis_iocp_recursive(const Graph& g, const EptasParams& params, std::uint64_t seed,
                               const EptasOptions& opt) {
  EptasParams inner = derive_params(params.eps / params.i, params.beta, params.d, params.i, params.mode,
                                    params.s_override, params.t_override);
  std::vector<VertexId> top(g.size());
  std::iota(top.begin(), top.end(), 0);
  Algorithm alg(inner, opt);
  SolveResult r = alg.run(g, top, params.i, seed, opt.injected_sample);
  r.method = "iocp_recursive";
  return finish(g, std::move(r));
}

}  // namespace geoclique
