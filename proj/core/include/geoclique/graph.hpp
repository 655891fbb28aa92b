#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geoclique/bitset.hpp"
#include "geoclique/errors.hpp"

namespace geoclique {

using VertexSet = std::vector<VertexId>;
using Edge = std::pair<VertexId, VertexId>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {}
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t size() const { return rows_.size(); }

  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
  const Bitset& neighbors(VertexId v) const { return rows_[v]; }
  Bitset closed_neighbors(VertexId v) const {
    Bitset b = rows_[v];
    b.set(v);
    return b;
  }
  std::size_t degree(VertexId v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  bool weighted() const { return !weights_.empty(); }
  const std::vector<double>& weights() const { return weights_; }
  void set_weights(std::vector<double> w);
  void clear_weights() { weights_.clear(); }
  double weight(VertexId v) const { return weights_.empty() ? 1.0 : weights_[v]; }
  double weight_of(const VertexSet& s) const;
  double weight_of(const Bitset& s) const;

  Bitset all() const {
    Bitset b(size());
    b.set_all();
    return b;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<Bitset> rows_;
  std::vector<double> weights_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_parent;  // local id -> parent id

  VertexSet lift(const VertexSet& local) const;
};

Graph complement(const Graph& g);
InducedSubgraph induced(const Graph& g, const VertexSet& s);
InducedSubgraph induced(const Graph& g, const Bitset& s);

Bitset to_bitset(std::size_t n, const VertexSet& s);
Bitset closed_neighborhood(const Graph& g, const Bitset& s);
Bitset closed_neighborhood(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

// Adjacency lists in increasing order, for BFS-heavy code.
std::vector<std::vector<VertexId>> adjacency_lists(const Graph& g);

// Colour 0/1 per vertex; kUncoloured marks vertices outside the coloured set.
struct TwoColoring {
  static constexpr int kUncoloured = -1;
  std::vector<int> color;
};

struct BipartiteCheck {
  std::optional<TwoColoring> coloring;
  std::vector<VertexId> odd_cycle;  // nonempty iff coloring is empty
  bool bipartite() const { return coloring.has_value(); }
};

BipartiteCheck two_color(const Graph& g);
bool is_proper_coloring(const Graph& g, const TwoColoring& c);
bool is_odd_cycle(const Graph& g, const std::vector<VertexId>& cycle);
bool is_chordless_cycle(const Graph& g, const std::vector<VertexId>& cycle);

std::optional<std::vector<VertexId>> shortest_odd_cycle(const Graph& g);

struct Layers {
  std::vector<VertexSet> layers;  // layers[k-1] = L_k
  VertexSet unreached;
  std::vector<int> distance;  // -1 for unreached
};
Layers bfs_layers(const Graph& g, const VertexSet& seeds);

struct Matching {
  std::vector<long> mate;  // -1 when unmatched
  std::size_t size = 0;
};
Matching hopcroft_karp(const Graph& g, const TwoColoring& coloring);

// Throws NotBipartite with the witness when g has an odd cycle.
VertexSet mis_bipartite(const Graph& g);
VertexSet mis_bipartite(const Graph& g, const TwoColoring& coloring);

enum class Objective { kMis, kClique };
constexpr std::size_t kBruteForceCap = 24;
VertexSet brute_force(const Graph& g, Objective objective, std::size_t cap = kBruteForceCap);

}  // namespace geoclique
