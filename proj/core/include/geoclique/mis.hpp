#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geoclique/graph.hpp"

namespace geoclique {

enum class ParamMode { kTheory, kPractical, kDeterministic };

struct EptasParams {
  double eps = 0.25;
  double beta = 1;
  int d = 4;
  int i = 1;
  ParamMode mode = ParamMode::kPractical;

  long long c = 0;
  double delta = 0;
  long long s = 0;  // theory: the formula; practical: the uncapped (2d/delta)ln(1/delta) term
  long long t = 0;
  long long z = 0;
  long long layer_budget = 0;  // ceil(2/(beta eps))
  long long block_max = 0;     // floor(2/(beta eps)); blocks are gamma = 0..block_max

  std::optional<long long> s_override;
  std::optional<long long> t_override;

  // Sample size used on an n-vertex graph.
  long long sample_size(std::size_t n) const;
  long long trials() const;
};

constexpr long long kDefaultTMax = 1'000'000'000LL;
constexpr long long kDeterministicMaxS = 3;

EptasParams derive_params(double eps, double beta, int d, int i = 1, ParamMode mode = ParamMode::kPractical,
                          std::optional<long long> s_override = std::nullopt,
                          std::optional<long long> t_override = std::nullopt, long long t_max = kDefaultTMax);

struct PathCounts {
  std::size_t bipartite = 0;
  std::size_t short_cycle = 0;
  std::size_t long_cycle = 0;
  std::size_t skipped = 0;
  std::size_t brute_force = 0;
  PathCounts& operator+=(const PathCounts& o);
};

struct SolveResult {
  VertexSet set;
  double value = 0;
  Objective objective = Objective::kMis;
  std::string method;
  std::size_t trials = 0;
  PathCounts paths;
  std::uint64_t seed = 0;
  long best_trial = -1;
  VertexSet cover;         // transversal enumerated over, when one was used
  bool heuristic = false;  // guarantee downgraded (sampled fallback)
};

std::string to_json(const SolveResult& r);

struct LayerDecomposition {
  std::vector<VertexId> cycle;  // v_1..v_g stored 0-based
  std::size_t g = 0;
  std::vector<VertexSet> layers;  // layers[k-1] = L_k
  std::size_t lambda = 0;
  VertexSet unreached;
  std::vector<int> layer_of;     // 0 on the cycle, k on L_k, -1 unreached
  std::vector<long> stratum_of;  // 1-based j(w); -1 unreached
  std::size_t light_layer = 0;   // i*, 1-based
  std::vector<VertexSet> blocks; // S^gamma restricted to H'', gamma = 0..block_max
  std::size_t light_block = 0;   // gamma*
  VertexSet h2;                  // H'' = cycle plus layers before i*

  // L_k^l: vertices of layer k (k >= 1) whose stratum is l (1-based).
  VertexSet stratum(std::size_t k, std::size_t l) const;
};

// cycle: a shortest odd cycle of g in traversal order, longer than params.c.
LayerDecomposition decompose_layers(const Graph& g, const std::vector<VertexId>& cycle, const EptasParams& params);

struct EptasOptions {
  std::optional<VertexSet> injected_sample;
  std::size_t threads = 1;
  std::size_t brute_force_cap = kBruteForceCap;
};

// Weighted mode is selected by g.weighted().
SolveResult mis_eptas(const Graph& g, const EptasParams& params, std::uint64_t seed, const EptasOptions& opt = {});
SolveResult mis_iocp_recursive(const Graph& g, const EptasParams& params, std::uint64_t seed,
                               const EptasOptions& opt = {});

constexpr std::size_t kEnumerationCap = 24;

double qptas_threshold(std::size_t n, int i);
SolveResult qptas_branch(const Graph& g, double eps, int i, std::uint64_t seed,
                         std::size_t exact_cap = kEnumerationCap);
VertexSet odd_cycle_cover(const Graph& g);
SolveResult mis_exact_occ(const Graph& g, const VertexSet& cover, std::size_t cap = kEnumerationCap);
SolveResult mis_exact_cycle_nbhd(const Graph& g, const std::vector<VertexId>& cycle,
                                 std::size_t cap = kEnumerationCap);
SolveResult mis_subexp(const Graph& g, std::size_t cap = kEnumerationCap);

// Recomputes the value and checks independence; throws std::logic_error.
void certify_independent(const Graph& g, SolveResult& r);

}  // namespace geoclique
