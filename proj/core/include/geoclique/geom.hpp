#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geoclique/graph.hpp"

namespace geoclique {

struct Vec2 {
  double x = 0, y = 0;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};
double dot(Vec2 a, Vec2 b);
double cross(Vec2 a, Vec2 b);
double norm(Vec2 a);
Vec2 rotate(Vec2 p, double angle);

struct Ball {
  std::vector<double> c;
  double r = 1;
  friend bool operator==(const Ball&, const Ball&) = default;
};

struct Triangle {
  std::array<Vec2, 3> p;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Filled ellipse with semi-axes a >= b > 0; the a-axis points along theta.
struct Ellipse {
  Vec2 c;
  double a = 1, b = 1, theta = 0;
  friend bool operator==(const Ellipse&, const Ellipse&) = default;
};

using GeomObject = std::variant<Ball, Triangle, Ellipse>;

enum class ObjectKind { kBalls, kTriangles, kEllipses };
std::string to_string(ObjectKind k);

struct GeometricInstance {
  ObjectKind kind = ObjectKind::kBalls;
  int dim = 2;
  std::vector<GeomObject> objects;
  std::vector<std::string> labels;  // empty or one per object

  std::size_t size() const { return objects.size(); }
  const Ball& ball(std::size_t i) const { return std::get<Ball>(objects[i]); }
  friend bool operator==(const GeometricInstance&, const GeometricInstance&) = default;
};

struct Tolerance {
  double tau = 1e-9;
};

// slack > 0 means overlap, slack < 0 separation; tangency gives 0 and counts
// as intersecting. marginal flags |slack| < tau.
struct Intersection {
  bool yes = false;
  double slack = 0;
  bool marginal = false;
};

// Throws InputError on mixed variants or invalid objects.
Intersection intersects(const GeomObject& a, const GeomObject& b, Tolerance tol = {});
void validate(const GeomObject& o, const std::string& path);
void validate(const GeometricInstance& inst);

struct MarginPair {
  VertexId u, v;
  double slack;
};
struct MarginReport {
  std::vector<MarginPair> marginal;
  double min_abs_slack = 0;  // over all pairs; +inf for fewer than 2 objects
  double min_edge_slack = 0;  // over intersecting pairs
  double min_nonedge_slack = 0;  // |slack| over disjoint pairs
};
struct BuiltGraph {
  Graph graph;
  MarginReport report;
};
BuiltGraph build_intersection_graph(const GeometricInstance& inst, Tolerance tol = {});

GeometricInstance make_proper(const GeometricInstance& inst, Tolerance tol = {});
GeometricInstance perturb_general_position(const GeometricInstance& inst, std::uint64_t seed, Tolerance tol = {});

// Exact orientation on coordinates snapped to the 2^-40 grid: +1, 0, -1.
int snapped_orientation(Vec2 a, Vec2 b, Vec2 c);
std::size_t count_collinear_center_triples(const GeometricInstance& inst);

struct GeneratorSpec {
  ObjectKind kind = ObjectKind::kBalls;
  int dim = 2;
  std::size_t n = 0;
  double lo = 0, hi = 10;          // sampling box per coordinate
  double rmin = 1, rmax = 1;        // ball radii; rmin == rmax gives unit law
  double size_min = 0.5, size_max = 2;  // triangle / ellipse extent
};
GeometricInstance generate_instance(const GeneratorSpec& spec, std::uint64_t seed);

// JSON with every number printed to 17 significant digits.
std::string save_instance(const GeometricInstance& inst);
GeometricInstance load_instance(const std::string& text);

}  // namespace geoclique
