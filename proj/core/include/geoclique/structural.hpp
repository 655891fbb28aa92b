#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "geoclique/geom.hpp"
#include "geoclique/graph.hpp"

namespace geoclique {

struct IocpWitness {
  bool found = false;
  std::vector<VertexId> first, second;
  std::size_t cap = 0;       // maximum cycle length searched
  bool exhaustive = false;   // cap covered every possible length
};

// Induced odd cycles of length <= max_len, each once, smallest vertex first.
std::vector<std::vector<VertexId>> induced_odd_cycles(const Graph& g, std::size_t max_len);

// cap = 0 searches every length (exhaustive).
IocpWitness find_two_anticomplete_odd_cycles(const Graph& g, std::size_t cap = 0);
bool verify_witness(const Graph& g, const IocpWitness& w);

constexpr std::size_t kVcDimensionCap = 20;
int vc_dimension(const Graph& g);

struct K22Verdict {
  bool convex = false;             // centers in convex position
  bool diagonal_nonedges = false;  // non-edge segments cross each other
  bool line_condition = false;     // l(c1,c2) meets seg(c3,c4) or l(c3,c4) meets seg(c1,c2)
  bool holds = false;
};
// disks: four planar balls; nonedges: the two disjoint non-adjacent pairs.
K22Verdict check_k22_quadrilateral(const std::array<Ball, 4>& disks,
                                   const std::array<std::pair<int, int>, 2>& nonedges);

using Chain2 = std::vector<Vec2>;

struct CrossingProfile {
  std::vector<long> a, b, c;        // chain 1
  std::vector<long> a2, b2, c2;     // chain 2
  long sum_a = 0, sum_b = 0, sum_c = 0, sum_a2 = 0, sum_b2 = 0, sum_c2 = 0;
  int attempts = 0;                 // perturbation rounds used; 0 = input was generic
  Chain2 chain1, chain2;            // coordinates actually evaluated

  bool invariants_hold() const;
};
CrossingProfile crossing_profile(const Chain2& chain1, const Chain2& chain2, std::uint64_t seed = 0);
bool in_general_position(const Chain2& chain1, const Chain2& chain2);

struct Vec3 {
  double x = 0, y = 0, z = 0;
  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
};
double dot(Vec3 a, Vec3 b);
Vec3 cross(Vec3 a, Vec3 b);
double norm(Vec3 a);
Vec3 normalized(Vec3 a);
double angle_between(Vec3 a, Vec3 b);

using Chain3 = std::vector<Vec3>;

constexpr std::size_t kNeedleSamples = 64;

// One pivot leg: the needle keeps x_{k+1} and drags its other end from x_k
// to x_{k+2}; directions sweep a great-circle arc from `from` to `to`.
struct NeedleLeg {
  std::size_t k = 0;
  double sign = 1;
  Vec3 from, to;
};

struct DirectionCurve {
  std::vector<Vec3> samples;  // K per leg plus the closing sample
  std::vector<NeedleLeg> legs;
  bool closed = false;
  bool antipodal = false;
};
DirectionCurve needle_curve(const Chain3& chain, std::size_t samples_per_leg = kNeedleSamples);

// Direction of leg `leg` at drag parameter tau in [0, 1].
Vec3 needle_direction(const Chain3& chain, const NeedleLeg& leg, double tau);
// Smallest angle between d and the curve, with the attaining leg and tau.
struct CurvePoint {
  double angle = 0;
  std::size_t leg = 0;
  double tau = 0;
};
CurvePoint closest_on_curve(const Chain3& chain, const DirectionCurve& curve, Vec3 d);

struct NeedleMatch {
  bool found = false;
  bool fallback = false;  // grid search was needed
  Vec3 direction;
  CurvePoint on_first, on_second;
  double error = 0;  // max angular distance to either curve
};
constexpr double kNeedleTolerance = 1e-6;
constexpr double kNeedleGridDegrees = 0.5;
NeedleMatch common_needle_direction(const Chain3& c1, const Chain3& c2,
                                    std::size_t samples_per_leg = kNeedleSamples);

}  // namespace geoclique
