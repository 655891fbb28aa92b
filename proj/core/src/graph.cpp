#include "geoclique/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <queue>

namespace geoclique {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u >= size() || v >= size()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  rows_[u].reset(v);
  rows_[v].reset(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v = rows_[u].next(u + 1); v < size(); v = rows_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

void Graph::set_weights(std::vector<double> w) {
  if (w.size() != size()) throw InputError("weights: expected " + std::to_string(size()) + " entries");
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!std::isfinite(w[i]) || w[i] < 0) throw InputError("weights[" + std::to_string(i) + "]: must be finite and >= 0");
  weights_ = std::move(w);
}

double Graph::weight_of(const VertexSet& s) const {
  if (weights_.empty()) return static_cast<double>(s.size());
  double t = 0;
  for (auto v : s) t += weights_[v];
  return t;
}

double Graph::weight_of(const Bitset& s) const {
  if (weights_.empty()) return static_cast<double>(s.count());
  double t = 0;
  s.for_each([&](std::size_t v) { t += weights_[v]; });
  return t;
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
  VertexSet out;
  out.reserve(local.size());
  for (auto v : local) out.push_back(to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.size();
  Graph h(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  if (g.weighted()) h.set_weights(g.weights());
  return h;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_parent = s;
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
  for (auto v : out.to_parent)
    if (v >= g.size()) throw InputError("induced: vertex " + std::to_string(v) + " out of range");
  const std::size_t k = out.to_parent.size();
  out.graph = Graph(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(out.to_parent[i], out.to_parent[j])) out.graph.add_edge(i, j);
  if (g.weighted()) {
    std::vector<double> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = g.weight(out.to_parent[i]);
    out.graph.set_weights(std::move(w));
  }
  return out;
}

InducedSubgraph induced(const Graph& g, const Bitset& s) { return induced(g, s.to_vector()); }

Bitset to_bitset(std::size_t n, const VertexSet& s) {
  Bitset b(n);
  for (auto v : s) b.set(v);
  return b;
}

Bitset closed_neighborhood(const Graph& g, const Bitset& s) {
  Bitset out = s;
  s.for_each([&](std::size_t v) { out |= g.neighbors(v); });
  return out;
}

Bitset closed_neighborhood(const Graph& g, const VertexSet& s) {
  return closed_neighborhood(g, to_bitset(g.size(), s));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<VertexId>> adj(g.size());
  for (VertexId v = 0; v < g.size(); ++v) adj[v] = g.neighbors(v).to_vector();
  return adj;
}

BipartiteCheck two_color(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> color(n, TwoColoring::kUncoloured);
  std::vector<VertexId> parent(n, n);
  std::vector<std::size_t> depth(n, 0);
  BipartiteCheck out;
  for (VertexId root = 0; root < n; ++root) {
    if (color[root] != TwoColoring::kUncoloured) continue;
    color[root] = 0;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      const Bitset& row = g.neighbors(u);
      for (VertexId w = row.first(); w < n; w = row.next(w + 1)) {
        if (color[w] == TwoColoring::kUncoloured) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          // Tree paths from u and w up to their common ancestor close an odd cycle.
          std::vector<VertexId> a{u}, b{w};
          VertexId x = u, y = w;
          while (depth[x] > depth[y]) a.push_back(x = parent[x]);
          while (depth[y] > depth[x]) b.push_back(y = parent[y]);
          while (x != y) {
            a.push_back(x = parent[x]);
            b.push_back(y = parent[y]);
          }
          b.pop_back();
          std::reverse(b.begin(), b.end());
          a.insert(a.end(), b.begin(), b.end());
          out.odd_cycle = std::move(a);
          return out;
        }
      }
    }
  }
  out.coloring = TwoColoring{std::move(color)};
  return out;
}

bool is_proper_coloring(const Graph& g, const TwoColoring& c) {
  if (c.color.size() != g.size()) return false;
  for (auto [u, v] : g.edges()) {
    if (c.color[u] == TwoColoring::kUncoloured || c.color[v] == TwoColoring::kUncoloured) continue;
    if (c.color[u] == c.color[v]) return false;
  }
  return true;
}

bool is_odd_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3 || k % 2 == 0) return false;
  std::vector<VertexId> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.size()) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
  return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.adjacent(cycle[i], cycle[j])) return false;
    }
  return true;
}

std::optional<std::vector<VertexId>> shortest_odd_cycle(const Graph& g) {
  const std::size_t n = g.size();
  if (two_color(g).bipartite()) return std::nullopt;
  const auto adj = adjacency_lists(g);
  // BFS on the bipartite double cover: state 2v+p = (v, parity p).
  std::vector<int> dist(2 * n);
  std::vector<std::size_t> par(2 * n);
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  std::vector<VertexId> best;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<std::size_t> q;
    dist[2 * s] = 0;
    q.push_back(2 * s);
    const std::size_t target = 2 * s + 1;
    while (!q.empty() && dist[target] < 0) {
      std::size_t st = q.front();
      q.pop_front();
      if (static_cast<std::size_t>(dist[st]) + 1 >= best_len) break;
      VertexId v = st / 2;
      std::size_t p = st % 2;
      for (VertexId w : adj[v]) {
        std::size_t nx = 2 * w + (1 - p);
        if (dist[nx] >= 0) continue;
        dist[nx] = dist[st] + 1;
        par[nx] = st;
        q.push_back(nx);
      }
    }
    if (dist[target] >= 0 && static_cast<std::size_t>(dist[target]) < best_len) {
      best_len = static_cast<std::size_t>(dist[target]);
      best.clear();
      for (std::size_t st = target; st != 2 * s; st = par[st]) best.push_back(st / 2);
      std::reverse(best.begin(), best.end());
      // best = walk after s ... ending at s; put s first.
      best.pop_back();
      best.insert(best.begin(), s);
      if (best_len == 3) break;
    }
  }
  return best;
}

Layers bfs_layers(const Graph& g, const VertexSet& seeds) {
  if (seeds.empty()) throw InputError("bfs_layers: empty seed set");
  const std::size_t n = g.size();
  Layers out;
  out.distance.assign(n, -1);
  std::vector<VertexId> frontier;
  for (auto s : seeds) {
    if (s >= n) throw InputError("bfs_layers: seed out of range");
    if (out.distance[s] < 0) {
      out.distance[s] = 0;
      frontier.push_back(s);
    }
  }
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    Bitset next(n);
    for (auto v : frontier) next |= g.neighbors(v);
    VertexSet layer;
    next.for_each([&](std::size_t w) {
      if (out.distance[w] < 0) {
        out.distance[w] = d;
        layer.push_back(w);
      }
    });
    if (layer.empty()) break;
    out.layers.push_back(layer);
    frontier = std::move(layer);
  }
  for (VertexId v = 0; v < n; ++v)
    if (out.distance[v] < 0) out.unreached.push_back(v);
  return out;
}

Matching hopcroft_karp(const Graph& g, const TwoColoring& coloring) {
  const std::size_t n = g.size();
  if (coloring.color.size() != n) throw InputError("hopcroft_karp: colouring size mismatch");
  for (VertexId v = 0; v < n; ++v)
    if (coloring.color[v] != 0 && coloring.color[v] != 1) throw InputError("hopcroft_karp: uncoloured vertex");
  if (!is_proper_coloring(g, coloring)) throw InputError("hopcroft_karp: colouring is not proper");
  const auto adj = adjacency_lists(g);
  Matching m;
  m.mate.assign(n, -1);
  std::vector<VertexId> left;
  for (VertexId v = 0; v < n; ++v)
    if (coloring.color[v] == 0) left.push_back(v);
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(n);

  auto bfs = [&]() {
    std::queue<VertexId> q;
    bool found = false;
    for (auto u : left) {
      if (m.mate[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (VertexId w : adj[u]) {
        long mu = m.mate[w];
        if (mu < 0) {
          found = true;
        } else if (dist[mu] == kInf) {
          dist[mu] = dist[u] + 1;
          q.push(static_cast<VertexId>(mu));
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> it(n);
  auto dfs = [&](auto&& self, VertexId u) -> bool {
    for (; it[u] < adj[u].size(); ++it[u]) {
      VertexId w = adj[u][it[u]];
      long mu = m.mate[w];
      if (mu < 0 || (dist[mu] == dist[u] + 1 && self(self, static_cast<VertexId>(mu)))) {
        m.mate[u] = static_cast<long>(w);
        m.mate[w] = static_cast<long>(u);
        ++it[u];
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (auto u : left)
      if (m.mate[u] < 0 && dfs(dfs, u)) ++m.size;
  }
  return m;
}

namespace {

constexpr double kWeightScale = 1e6;

struct FlowNetwork {
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };
  explicit FlowNetwork(std::size_t n) : head(n) {}
  void add(std::size_t u, std::size_t v, std::int64_t c) {
    head[u].push_back(arcs.size());
    arcs.push_back({v, c});
    head[v].push_back(arcs.size());
    arcs.push_back({u, 0});
  }
  // Dinic's blocking-flow variant of augmenting paths.
  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    std::vector<int> level(head.size());
    std::vector<std::size_t> it(head.size());
    while (true) {
      std::fill(level.begin(), level.end(), -1);
      std::queue<std::size_t> q;
      level[s] = 0;
      q.push(s);
      while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto a : head[u])
          if (arcs[a].cap > 0 && level[arcs[a].to] < 0) {
            level[arcs[a].to] = level[u] + 1;
            q.push(arcs[a].to);
          }
      }
      if (level[t] < 0) return total;
      std::fill(it.begin(), it.end(), 0);
      auto push = [&](auto&& self, std::size_t u, std::int64_t f) -> std::int64_t {
        if (u == t) return f;
        for (; it[u] < head[u].size(); ++it[u]) {
          auto a = head[u][it[u]];
          auto v = arcs[a].to;
          if (arcs[a].cap <= 0 || level[v] != level[u] + 1) continue;
          auto got = self(self, v, std::min(f, arcs[a].cap));
          if (got > 0) {
            arcs[a].cap -= got;
            arcs[a ^ 1].cap += got;
            return got;
          }
        }
        return 0;
      };
      while (auto f = push(push, s, std::numeric_limits<std::int64_t>::max())) total += f;
    }
  }
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(head.size(), false);
    std::queue<std::size_t> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto a : head[u])
        if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
          seen[arcs[a].to] = true;
          q.push(arcs[a].to);
        }
    }
    return seen;
  }
  std::vector<std::vector<std::size_t>> head;
  std::vector<Arc> arcs;
};

VertexSet konig_mis(const Graph& g, const TwoColoring& c) {
  const std::size_t n = g.size();
  Matching m = hopcroft_karp(g, c);
  // Alternating reachability from unmatched left vertices.
  std::vector<bool> z(n, false);
  std::queue<VertexId> q;
  for (VertexId v = 0; v < n; ++v)
    if (c.color[v] == 0 && m.mate[v] < 0) {
      z[v] = true;
      q.push(v);
    }
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    const Bitset& row = g.neighbors(u);
    for (VertexId w = row.first(); w < n; w = row.next(w + 1)) {
      if (z[w]) continue;
      z[w] = true;
      if (m.mate[w] >= 0 && !z[m.mate[w]]) {
        z[m.mate[w]] = true;
        q.push(static_cast<VertexId>(m.mate[w]));
      }
    }
  }
  VertexSet out;
  for (VertexId v = 0; v < n; ++v)
    if ((c.color[v] == 0) == z[v]) out.push_back(v);
  return out;
}

VertexSet mincut_mis(const Graph& g, const TwoColoring& c) {
  const std::size_t n = g.size();
  const std::size_t s = n, t = n + 1;
  FlowNetwork net(n + 2);
  std::int64_t total = 0;
  std::vector<std::int64_t> w(n);
  for (VertexId v = 0; v < n; ++v) {
    w[v] = std::llround(g.weight(v) * kWeightScale);
    total += w[v];
  }
  const std::int64_t inf = total + 1;
  for (VertexId v = 0; v < n; ++v) {
    if (c.color[v] == 0) {
      net.add(s, v, w[v]);
      const Bitset& row = g.neighbors(v);
      for (VertexId u = row.first(); u < n; u = row.next(u + 1)) net.add(v, u, inf);
    } else {
      net.add(v, t, w[v]);
    }
  }
  net.max_flow(s, t);
  auto side = net.source_side(s);
  VertexSet out;
  for (VertexId v = 0; v < n; ++v)
    if ((c.color[v] == 0) == side[v]) out.push_back(v);
  return out;
}

}  // namespace

VertexSet mis_bipartite(const Graph& g, const TwoColoring& coloring) {
  if (coloring.color.size() != g.size()) throw InputError("mis_bipartite: colouring size mismatch");
  TwoColoring c = coloring;
  for (auto& x : c.color)
    if (x == TwoColoring::kUncoloured) x = 0;
  if (!is_proper_coloring(g, c)) throw InputError("mis_bipartite: colouring is not proper");
  VertexSet out = g.weighted() ? mincut_mis(g, c) : konig_mis(g, c);
  if (!is_independent(g, out)) throw std::logic_error("mis_bipartite: result not independent");
  return out;
}

VertexSet mis_bipartite(const Graph& g) {
  auto chk = two_color(g);
  if (!chk.bipartite()) throw NotBipartite(chk.odd_cycle);
  return mis_bipartite(g, *chk.coloring);
}

namespace {

struct BruteForce {
  std::vector<std::uint64_t> closed;
  std::vector<double> w;
  double best_w = -1;
  std::uint64_t best = 0;

  double mass(std::uint64_t p) const {
    double t = 0;
    while (p) {
      t += w[static_cast<std::size_t>(std::countr_zero(p))];
      p &= p - 1;
    }
    return t;
  }

  void run(std::uint64_t p, std::uint64_t cur, double cur_w) {
    if (p == 0) {
      if (cur_w > best_w) {
        best_w = cur_w;
        best = cur;
      }
      return;
    }
    if (cur_w + mass(p) <= best_w) return;
    std::size_t v = static_cast<std::size_t>(std::countr_zero(p));
    std::uint64_t bit = std::uint64_t{1} << v;
    run(p & ~closed[v], cur | bit, cur_w + w[v]);
    if ((closed[v] & p) != bit) run(p & ~bit, cur, cur_w);
  }
};

}  // namespace

VertexSet brute_force(const Graph& g, Objective objective, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap || n > 64) throw CapExceeded("brute_force", n, std::min<std::size_t>(cap, 64));
  BruteForce bf;
  bf.closed.resize(n);
  bf.w.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t row = std::uint64_t{1} << v;
    for (VertexId u = 0; u < n; ++u)
      if (u != v && (objective == Objective::kMis) == g.adjacent(u, v)) row |= std::uint64_t{1} << u;
    bf.closed[v] = row;
    bf.w[v] = g.weight(v);
  }
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  bf.run(all, 0, 0.0);
  VertexSet out;
  for (VertexId v = 0; v < n; ++v)
    if (bf.best >> v & 1u) out.push_back(v);
  return out;
}

}  // namespace geoclique
