#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "geoclique/mis.hpp"
#include "geoclique/rng.hpp"

namespace geoclique {

VertexSet odd_cycle_cover(const Graph& g) {
  Bitset alive = g.all();
  VertexSet cover;
  while (true) {
    InducedSubgraph sub = induced(g, alive);
    auto cyc = shortest_odd_cycle(sub.graph);
    if (!cyc) break;
    for (auto v : *cyc) {
      cover.push_back(sub.to_parent[v]);
      alive.reset(sub.to_parent[v]);
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

namespace {

struct OccSearch {
  const Graph& g;
  const std::vector<VertexId>& cover;
  const Bitset& base;
  const TwoColoring& base_color;  // indexed by vertex of g
  double best = -1;
  VertexSet best_set;

  void leaf(const VertexSet& I, const Bitset& blocked) {
    const Bitset rest = base - blocked;
    const double wi = g.weight_of(I);
    if (wi + g.weight_of(rest) <= best) return;
    InducedSubgraph sub = induced(g, rest);
    TwoColoring c;
    c.color.resize(sub.to_parent.size());
    for (std::size_t i = 0; i < c.color.size(); ++i) c.color[i] = base_color.color[sub.to_parent[i]];
    VertexSet sol = sub.lift(mis_bipartite(sub.graph, c));
    const double w = wi + g.weight_of(sol);
    if (w > best) {
      best = w;
      best_set = I;
      best_set.insert(best_set.end(), sol.begin(), sol.end());
    }
  }

  void run(std::size_t k, VertexSet& I, Bitset& blocked) {
    if (k == cover.size()) {
      leaf(I, blocked);
      return;
    }
    run(k + 1, I, blocked);
    const VertexId v = cover[k];
    if (blocked.test(v)) return;
    Bitset saved = blocked;
    blocked |= g.closed_neighbors(v);
    I.push_back(v);
    run(k + 1, I, blocked);
    I.pop_back();
    blocked = std::move(saved);
  }
};

SolveResult occ_impl(const Graph& g, const VertexSet& cover_in, std::size_t cap, const char* method) {
  VertexSet cover = cover_in;
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  for (auto v : cover)
    if (v >= g.size()) throw InputError(std::string(method) + ": cover vertex out of range");
  if (cover.size() > cap) throw CapExceeded(method, cover.size(), cap);
  Bitset base = g.all() - to_bitset(g.size(), cover);
  InducedSubgraph bsub = induced(g, base);
  auto chk = two_color(bsub.graph);
  if (!chk.bipartite()) throw InputError(std::string(method) + ": removing the cover does not leave a bipartite graph");
  TwoColoring color;
  color.color.assign(g.size(), TwoColoring::kUncoloured);
  for (std::size_t i = 0; i < bsub.to_parent.size(); ++i) color.color[bsub.to_parent[i]] = chk.coloring->color[i];
  OccSearch search{g, cover, base, color, -1, {}};
  VertexSet I;
  Bitset blocked(g.size());
  search.run(0, I, blocked);
  SolveResult r;
  r.set = std::move(search.best_set);
  r.method = method;
  r.cover = cover;
  r.trials = 1;
  certify_independent(g, r);
  return r;
}

}  // namespace

SolveResult mis_exact_occ(const Graph& g, const VertexSet& cover, std::size_t cap) {
  return occ_impl(g, cover, cap, "exact_occ");
}

SolveResult mis_exact_cycle_nbhd(const Graph& g, const std::vector<VertexId>& cycle, std::size_t cap) {
  if (!is_odd_cycle(g, cycle)) throw InputError("exact_cycle_nbhd: not an odd cycle of the graph");
  Bitset nc = closed_neighborhood(g, cycle);
  InducedSubgraph rest = induced(g, g.all() - nc);
  if (auto other = shortest_odd_cycle(rest.graph)) {
    VertexSet b;
    for (auto v : *other) b.push_back(rest.to_parent[v]);
    throw IocpViolation(cycle, b);
  }
  return occ_impl(g, nc.to_vector(), cap, "exact_cycle_nbhd");
}

namespace {

// Exact leaf solver for graphs where no vertex has degree >= n^(1/3).
VertexSet subexp_leaf(const Graph& h, std::size_t cap) {
  auto chk = two_color(h);
  if (chk.bipartite()) return mis_bipartite(h, *chk.coloring);
  auto cyc = *shortest_odd_cycle(h);
  VertexSet cover = odd_cycle_cover(h);
  Bitset nc = closed_neighborhood(h, cyc);
  const bool nbhd_ok = two_color(induced(h, h.all() - nc).graph).bipartite();
  const std::size_t nc_size = nc.count();
  // Compare 2^|cover| with 2^|N[C]|; the smaller exponent wins, cover on ties.
  const bool use_nbhd = nbhd_ok && nc_size < cover.size();
  if (use_nbhd && nc_size <= cap) return occ_impl(h, nc.to_vector(), cap, "exact_cycle_nbhd").set;
  if (cover.size() <= cap) return occ_impl(h, cover, cap, "exact_occ").set;
  if (nbhd_ok && nc_size <= cap) return occ_impl(h, nc.to_vector(), cap, "exact_cycle_nbhd").set;
  throw CapExceeded("mis_subexp leaf enumeration", std::min(cover.size(), nc_size), cap);
}

VertexSet subexp_rec(const Graph& h, std::size_t cap, std::size_t& branches) {
  const std::size_t n = h.size();
  if (n == 0) return {};
  const double thr = std::cbrt(static_cast<double>(n));
  VertexId pick = n;
  std::size_t best_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t d = h.degree(v);
    if (d >= 1 && static_cast<double>(d) >= thr && d > best_deg) {
      best_deg = d;
      pick = v;
    }
  }
  if (pick == n) return subexp_leaf(h, cap);
  ++branches;
  InducedSubgraph with = induced(h, h.all() - h.closed_neighbors(pick));
  VertexSet a = with.lift(subexp_rec(with.graph, cap, branches));
  a.push_back(pick);
  Bitset rest = h.all();
  rest.reset(pick);
  InducedSubgraph without = induced(h, rest);
  VertexSet b = without.lift(subexp_rec(without.graph, cap, branches));
  return h.weight_of(a) >= h.weight_of(b) ? a : b;
}

}  // namespace

SolveResult mis_subexp(const Graph& g, std::size_t cap) {
  SolveResult r;
  std::size_t branches = 0;
  r.set = subexp_rec(g, cap, branches);
  r.method = "subexp";
  r.trials = branches;
  certify_independent(g, r);
  return r;
}

double qptas_threshold(std::size_t n, int i) {
  if (n <= 1) return std::numeric_limits<double>::infinity();
  const double ln = std::log(static_cast<double>(n));
  const double nn = static_cast<double>(n);
  if (i <= 1) return std::max(1.0, std::ceil(nn / std::pow(ln, 4)));
  return std::max(1.0, std::ceil(nn / (2.0 * i * std::pow(ln, 5))));
}

namespace {

struct Qptas {
  double eps;
  int i;
  std::uint64_t seed;
  std::size_t cap;
  std::size_t branches = 0;
  std::size_t leaves = 0;

  VertexSet rec(const Graph& h) {
    const std::size_t n = h.size();
    if (n == 0) return {};
    const double thr = qptas_threshold(n, i);
    VertexId pick = n;
    std::size_t best_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
      const std::size_t d = h.degree(v);
      if (static_cast<double>(d) >= thr && d > best_deg) {
        best_deg = d;
        pick = v;
      }
    }
    if (pick == n) {
      ++leaves;
      if (n <= cap) return mis_subexp(h, cap).set;
      EptasParams p = derive_params(eps, 1.0, 4, i);
      return mis_iocp_recursive(h, p, splitmix64(seed + leaves)).set;
    }
    ++branches;
    InducedSubgraph with = induced(h, h.all() - h.closed_neighbors(pick));
    VertexSet a = with.lift(rec(with.graph));
    a.push_back(pick);
    Bitset rest = h.all();
    rest.reset(pick);
    InducedSubgraph without = induced(h, rest);
    VertexSet b = without.lift(rec(without.graph));
    return h.weight_of(a) >= h.weight_of(b) ? a : b;
  }
};

}  // namespace

SolveResult qptas_branch(const Graph& g, double eps, int i, std::uint64_t seed, std::size_t exact_cap) {
  if (!(eps > 0 && eps < 1)) throw InputError("eps must lie in (0, 1)");
  if (i < 1) throw InputError("i must be positive");
  Qptas q{eps, i, seed, exact_cap};
  SolveResult r;
  r.set = q.rec(g);
  r.method = "qptas";
  r.seed = seed;
  r.trials = q.branches;
  certify_independent(g, r);
  return r;
}

}  // namespace geoclique
