#pragma once

#include <cstdint>
#include <optional>

#include "geoclique/geom.hpp"
#include "geoclique/mis.hpp"

namespace geoclique {

enum class CliqueMode { kEptas, kSubexp, kExact, kPierce2 };

// Constants of the clique reductions.
inline constexpr double kDiskBetaNoRep = 1.0 / 36;
inline constexpr double kDiskBetaRep = 1.0 / 4;
inline constexpr double kUnitBallBeta = 1.0 / 30;
inline constexpr int kNeighborhoodVcDim = 4;
inline constexpr std::size_t kPierceCap = 200'000;  // candidate pairs before sampling

struct PipelineConfig {
  double eps = 0.25;
  std::uint64_t seed = 0;
  std::optional<double> beta;  // empty: the class constant
  bool representation = false;
  CliqueMode mode = CliqueMode::kEptas;
  ParamMode params = ParamMode::kPractical;
  std::optional<long long> s_override;
  std::optional<long long> t_override;
  std::size_t threads = 1;
  std::size_t exact_cap = kEnumerationCap;
  std::size_t pierce_cap = kPierceCap;
};

// Any IocpViolation raised on a branch is rethrown with ids of the input
// graph and a "not a disk graph" message.
SolveResult clique_disk(const Graph& g, const PipelineConfig& cfg);
SolveResult clique_disk(const GeometricInstance& inst, PipelineConfig cfg);
SolveResult clique_unit_ball(const Graph& g, const PipelineConfig& cfg);
SolveResult clique_unit_ball(const GeometricInstance& inst, PipelineConfig cfg);

SolveResult clique_pierce2(const GeometricInstance& inst, std::uint64_t seed = 0, std::size_t cap = kPierceCap);

// Points where the two circles cross (0, 1 or 2 of them).
std::vector<Vec2> circle_intersections(const Ball& a, const Ball& b);

}  // namespace geoclique
