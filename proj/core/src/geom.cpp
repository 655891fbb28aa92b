#include "geoclique/geom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "geoclique/rng.hpp"

namespace geoclique {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }
Vec2 rotate(Vec2 p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

std::string to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::kBalls: return "balls";
    case ObjectKind::kTriangles: return "triangles";
    case ObjectKind::kEllipses: return "ellipses";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double x, const std::string& path) {
  if (!std::isfinite(x)) throw InputError(path + ": non-finite value");
}

double ball_slack(const Ball& a, const Ball& b) {
  if (a.c.size() != b.c.size()) throw InputError("intersects: balls of different dimension");
  double s = 0;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    const double d = a.c[i] - b.c[i];
    s += d * d;
  }
  return a.r + b.r - std::sqrt(s);
}

// Minimum projected overlap over the six edge normals; negative = separating gap.
double triangle_slack(const Triangle& a, const Triangle& b) {
  double slack = kInf;
  for (const Triangle* t : {&a, &b}) {
    for (int e = 0; e < 3; ++e) {
      Vec2 d = t->p[(e + 1) % 3] - t->p[e];
      const double len = norm(d);
      Vec2 n{-d.y / len, d.x / len};
      double amin = kInf, amax = -kInf, bmin = kInf, bmax = -kInf;
      for (int k = 0; k < 3; ++k) {
        const double pa = dot(n, a.p[k]), pb = dot(n, b.p[k]);
        amin = std::min(amin, pa);
        amax = std::max(amax, pa);
        bmin = std::min(bmin, pb);
        bmax = std::max(bmax, pb);
      }
      slack = std::min(slack, std::min(amax, bmax) - std::max(amin, bmin));
    }
  }
  return slack;
}

// Bisection for the Lagrange parameter of the closest boundary point.
double ellipse_root(double r0, double z0, double z1, double g) {
  const double n0 = r0 * z0;
  double s0 = z1 - 1;
  double s1 = g < 0 ? 0 : std::hypot(n0, z1) - 1;
  double s = 0;
  for (int i = 0; i < 64; ++i) {
    s = 0.5 * (s0 + s1);
    if (s == s0 || s == s1 || (s1 - s0) <= 1e-12 * std::max(1.0, std::abs(s))) break;
    const double ratio0 = n0 / (s + r0), ratio1 = z1 / (s + 1);
    const double gg = ratio0 * ratio0 + ratio1 * ratio1 - 1;
    if (gg > 0) s0 = s;
    else if (gg < 0) s1 = s;
    else break;
  }
  return s;
}

// Distance from (y0, y1) in the first quadrant to the ellipse boundary with
// semi-axes e0 >= e1 aligned to the axes.
double boundary_distance(double e0, double e1, double y0, double y1) {
  if (y1 > 0) {
    if (y0 > 0) {
      const double z0 = y0 / e0, z1 = y1 / e1;
      const double g = z0 * z0 + z1 * z1 - 1;
      if (g == 0) return 0;
      const double r0 = (e0 / e1) * (e0 / e1);
      const double sbar = ellipse_root(r0, z0, z1, g);
      const double x0 = r0 * y0 / (sbar + r0), x1 = y1 / (sbar + 1);
      return std::hypot(x0 - y0, x1 - y1);
    }
    return std::abs(y1 - e1);
  }
  const double numer0 = e0 * y0, denom0 = e0 * e0 - e1 * e1;
  if (numer0 < denom0) {
    const double xde0 = numer0 / denom0;
    const double x0 = e0 * xde0, x1 = e1 * std::sqrt(std::max(0.0, 1 - xde0 * xde0));
    return std::hypot(x0 - y0, x1);
  }
  return std::abs(y0 - e0);
}

// Signed slack of b against a, measured after mapping a onto the unit disk and
// scaled back by a's minor semi-axis (a lower bound on the true margin).
double ellipse_slack_oneway(const Ellipse& a, const Ellipse& b) {
  const double ca = std::cos(a.theta), sa = std::sin(a.theta);
  const double cb = std::cos(b.theta), sb = std::sin(b.theta);
  // L = diag(1/a,1/b) R(-theta_a); maps a onto the unit disk.
  const double L[2][2] = {{ca / a.a, sa / a.a}, {-sa / a.b, ca / a.b}};
  // Shape matrix of b: R(theta_b) diag(1/a^2, 1/b^2) R(theta_b)^T.
  const double ia = 1 / (b.a * b.a), ib = 1 / (b.b * b.b);
  const double M[2][2] = {{cb * cb * ia + sb * sb * ib, cb * sb * (ia - ib)},
                          {cb * sb * (ia - ib), sb * sb * ia + cb * cb * ib}};
  // Linv = R(theta_a) diag(a, b).
  const double Li[2][2] = {{ca * a.a, -sa * a.b}, {sa * a.a, ca * a.b}};
  double Mp[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double s = 0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) s += Li[k][i] * M[k][l] * Li[l][j];
      Mp[i][j] = s;
    }
  const Vec2 d = b.c - a.c;
  const Vec2 cp{L[0][0] * d.x + L[0][1] * d.y, L[1][0] * d.x + L[1][1] * d.y};
  // Eigen-decomposition of the symmetric 2x2 matrix Mp.
  const double p = Mp[0][0], q = Mp[0][1], r = Mp[1][1];
  const double mean = 0.5 * (p + r), diff = 0.5 * (p - r);
  const double rad = std::hypot(diff, q);
  const double lmin = mean - rad, lmax = mean + rad;  // lmin -> major axis
  const double phi = 0.5 * std::atan2(2 * q, p - r);  // eigenvector angle for lmax
  const double e0 = 1 / std::sqrt(lmin), e1 = 1 / std::sqrt(lmax);
  // Major axis is perpendicular to the lmax eigenvector.
  const Vec2 u0{-std::sin(phi), std::cos(phi)}, u1{std::cos(phi), std::sin(phi)};
  const Vec2 y{-cp.x, -cp.y};
  const double y0 = std::abs(dot(y, u0)), y1 = std::abs(dot(y, u1));
  double dist = boundary_distance(e0, std::min(e1, e0), y0, y1);
  const bool inside = (y0 / e0) * (y0 / e0) + (y1 / e1) * (y1 / e1) <= 1;
  if (inside) dist = -dist;
  return (1 - dist) * a.b;
}

double ellipse_slack(const Ellipse& a, const Ellipse& b) {
  const double ab = ellipse_slack_oneway(a, b), ba = ellipse_slack_oneway(b, a);
  return std::abs(ab) <= std::abs(ba) ? ab : ba;
}

}  // namespace

void validate(const GeomObject& o, const std::string& path) {
  if (auto* b = std::get_if<Ball>(&o)) {
    if (b->c.empty()) throw InputError(path + ".c: empty center");
    for (std::size_t i = 0; i < b->c.size(); ++i) require_finite(b->c[i], path + ".c[" + std::to_string(i) + "]");
    require_finite(b->r, path + ".r");
    if (!(b->r > 0)) throw InputError(path + ".r: radius must be positive");
  } else if (auto* t = std::get_if<Triangle>(&o)) {
    for (int i = 0; i < 3; ++i) {
      require_finite(t->p[i].x, path + ".p[" + std::to_string(i) + "][0]");
      require_finite(t->p[i].y, path + ".p[" + std::to_string(i) + "][1]");
    }
    if (cross(t->p[1] - t->p[0], t->p[2] - t->p[0]) == 0) throw InputError(path + ".p: collinear vertices");
  } else {
    const auto& e = std::get<Ellipse>(o);
    require_finite(e.c.x, path + ".c[0]");
    require_finite(e.c.y, path + ".c[1]");
    require_finite(e.a, path + ".a");
    require_finite(e.b, path + ".b");
    require_finite(e.theta, path + ".theta");
    if (!(e.b > 0)) throw InputError(path + ".b: semi-axis must be positive");
    if (e.a < e.b) throw InputError(path + ".a: major semi-axis smaller than b");
  }
}

void validate(const GeometricInstance& inst) {
  for (std::size_t i = 0; i < inst.objects.size(); ++i) {
    const std::string path = "objects[" + std::to_string(i) + "]";
    const auto& o = inst.objects[i];
    const bool ok = (inst.kind == ObjectKind::kBalls && std::holds_alternative<Ball>(o)) ||
                    (inst.kind == ObjectKind::kTriangles && std::holds_alternative<Triangle>(o)) ||
                    (inst.kind == ObjectKind::kEllipses && std::holds_alternative<Ellipse>(o));
    if (!ok) throw InputError(path + ": object variant does not match kind " + to_string(inst.kind));
    if (auto* b = std::get_if<Ball>(&o); b && static_cast<int>(b->c.size()) != inst.dim)
      throw InputError(path + ".c: expected " + std::to_string(inst.dim) + " coordinates, got " +
                       std::to_string(b->c.size()));
    validate(o, path);
  }
  if (inst.kind != ObjectKind::kBalls && inst.dim != 2) throw InputError("dim: triangles and ellipses are planar");
  if (!inst.labels.empty() && inst.labels.size() != inst.objects.size())
    throw InputError("labels: expected one label per object");
}

Intersection intersects(const GeomObject& a, const GeomObject& b, Tolerance tol) {
  if (a.index() != b.index()) throw InputError("intersects: mixed object variants");
  validate(a, "a");
  validate(b, "b");
  double slack;
  if (auto* ba = std::get_if<Ball>(&a)) slack = ball_slack(*ba, std::get<Ball>(b));
  else if (auto* ta = std::get_if<Triangle>(&a)) slack = triangle_slack(*ta, std::get<Triangle>(b));
  else slack = ellipse_slack(std::get<Ellipse>(a), std::get<Ellipse>(b));
  return {slack >= 0, slack, std::abs(slack) < tol.tau};
}

BuiltGraph build_intersection_graph(const GeometricInstance& inst, Tolerance tol) {
  validate(inst);
  const std::size_t n = inst.size();
  BuiltGraph out{Graph(n), {}};
  out.report.min_abs_slack = out.report.min_edge_slack = out.report.min_nonedge_slack = kInf;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      Intersection r = intersects(inst.objects[u], inst.objects[v], tol);
      if (r.yes) {
        out.graph.add_edge(u, v);
        out.report.min_edge_slack = std::min(out.report.min_edge_slack, r.slack);
      } else {
        out.report.min_nonedge_slack = std::min(out.report.min_nonedge_slack, -r.slack);
      }
      out.report.min_abs_slack = std::min(out.report.min_abs_slack, std::abs(r.slack));
      if (r.marginal) out.report.marginal.push_back({u, v, r.slack});
    }
  return out;
}

namespace {

void require_balls(const GeometricInstance& inst, const char* what) {
  if (inst.kind != ObjectKind::kBalls) throw InputError(std::string(what) + ": expects a disk instance");
  validate(inst);
}

}  // namespace

GeometricInstance make_proper(const GeometricInstance& inst, Tolerance tol) {
  require_balls(inst, "make_proper");
  const std::size_t n = inst.size();
  double eps = kInf;
  std::vector<std::pair<std::size_t, std::size_t>> tangent;
  double rmin = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    rmin = std::min(rmin, inst.ball(i).r);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = ball_slack(inst.ball(i), inst.ball(j));
      if (s < 0) eps = std::min(eps, -s);
      else if (s < tol.tau) tangent.emplace_back(i, j);
    }
  }
  GeometricInstance out = inst;
  if (tangent.empty()) return out;
  // A third of the gap rather than half: two grown disks facing each other
  // across the smallest gap must stay apart.
  const double grow = std::isfinite(eps) ? eps / 3 : std::max(1e-6 * rmin, 2 * tol.tau);
  std::vector<bool> grown(n, false);
  for (auto [i, j] : tangent) {
    if (grown[i] || grown[j]) continue;
    std::get<Ball>(out.objects[i]).r += grow;
    grown[i] = true;
  }
  return out;
}

namespace {

constexpr double kGrid = 0x1.0p40;

std::int64_t snap_int(double x) {
  if (!(std::abs(x) < 0x1.0p22)) throw InputError("coordinate too large for the 2^-40 snapping grid");
  return std::llround(x * kGrid);
}

double snap(double x) { return static_cast<double>(snap_int(x)) / kGrid; }

}  // namespace

int snapped_orientation(Vec2 a, Vec2 b, Vec2 c) {
  const __int128 ax = snap_int(a.x), ay = snap_int(a.y);
  const __int128 bx = snap_int(b.x), by = snap_int(b.y);
  const __int128 cx = snap_int(c.x), cy = snap_int(c.y);
  const __int128 det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

std::size_t count_collinear_center_triples(const GeometricInstance& inst) {
  if (inst.kind != ObjectKind::kBalls || inst.dim != 2) throw InputError("collinearity test needs disks");
  const std::size_t n = inst.size();
  std::vector<Vec2> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = {inst.ball(i).c[0], inst.ball(i).c[1]};
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (snapped_orientation(c[i], c[j], c[k]) == 0) ++count;
  return count;
}

GeometricInstance perturb_general_position(const GeometricInstance& inst, std::uint64_t seed, Tolerance tol) {
  require_balls(inst, "perturb_general_position");
  if (inst.dim != 2) throw InputError("perturb_general_position: expects planar disks");
  const std::size_t n = inst.size();
  double eps = kInf;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = ball_slack(inst.ball(i), inst.ball(j));
      if (s >= 0 && s < tol.tau)
        throw InputError("perturb_general_position: objects " + std::to_string(i) + " and " + std::to_string(j) +
                         " are tangent; instance is not proper");
      eps = std::min(eps, std::abs(s));
    }
  if (count_collinear_center_triples(inst) == 0) return inst;
  if (!std::isfinite(eps)) eps = 1;
  const Graph before = build_intersection_graph(inst, tol).graph;
  // Each center moves strictly less than eps/2 in total, snapping included.
  const double step = 0.24 * eps;
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    GeometricInstance out = inst;
    for (std::size_t i = 0; i < n; ++i) {
      auto& b = std::get<Ball>(out.objects[i]);
      const double ang = rng.uniform(0, 6.283185307179586);
      const double rad = step * std::sqrt(rng.uniform());
      b.c[0] = snap(b.c[0] + rad * std::cos(ang));
      b.c[1] = snap(b.c[1] + rad * std::sin(ang));
    }
    if (count_collinear_center_triples(out) == 0 && build_intersection_graph(out, tol).graph == before) return out;
  }
  throw InputError("perturb_general_position: no general-position perturbation found");
}

GeometricInstance generate_instance(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.dim < 1) throw InputError("generator: dim must be positive");
  if (!(spec.lo <= spec.hi)) throw InputError("generator: empty sampling box");
  if (!(spec.rmin > 0 && spec.rmin <= spec.rmax)) throw InputError("generator: invalid radius range");
  if (!(spec.size_min > 0 && spec.size_min <= spec.size_max)) throw InputError("generator: invalid size range");
  if (spec.kind != ObjectKind::kBalls && spec.dim != 2) throw InputError("generator: triangles and ellipses are planar");
  Rng rng(seed);
  GeometricInstance inst;
  inst.kind = spec.kind;
  inst.dim = spec.dim;
  for (std::size_t i = 0; i < spec.n; ++i) {
    switch (spec.kind) {
      case ObjectKind::kBalls: {
        Ball b;
        for (int k = 0; k < spec.dim; ++k) b.c.push_back(rng.uniform(spec.lo, spec.hi));
        b.r = spec.rmin == spec.rmax ? spec.rmin : rng.uniform(spec.rmin, spec.rmax);
        inst.objects.emplace_back(std::move(b));
        break;
      }
      case ObjectKind::kTriangles: {
        const Vec2 center{rng.uniform(spec.lo, spec.hi), rng.uniform(spec.lo, spec.hi)};
        Triangle t;
        while (true) {
          for (auto& p : t.p) {
            const double r = rng.uniform(spec.size_min, spec.size_max);
            const double a = rng.uniform(0, 6.283185307179586);
            p = center + Vec2{r * std::cos(a), r * std::sin(a)};
          }
          const double area = std::abs(cross(t.p[1] - t.p[0], t.p[2] - t.p[0]));
          if (area > 1e-2 * spec.size_min * spec.size_min) break;
        }
        inst.objects.emplace_back(t);
        break;
      }
      case ObjectKind::kEllipses: {
        Ellipse e;
        e.c = {rng.uniform(spec.lo, spec.hi), rng.uniform(spec.lo, spec.hi)};
        e.a = rng.uniform(spec.size_min, spec.size_max);
        e.b = rng.uniform(spec.size_min, spec.size_max);
        if (e.a < e.b) std::swap(e.a, e.b);
        e.theta = rng.uniform(0, 3.141592653589793);
        inst.objects.emplace_back(e);
        break;
      }
    }
  }
  return inst;
}

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string point(Vec2 p) { return "[" + num(p.x) + "," + num(p.y) + "]"; }

}  // namespace

std::string save_instance(const GeometricInstance& inst) {
  validate(inst);
  std::ostringstream os;
  os << "{\"kind\":\"" << to_string(inst.kind) << "\",\"dim\":" << inst.dim << ",\"objects\":[";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (i) os << ',';
    os << "\n  ";
    const auto& o = inst.objects[i];
    if (auto* b = std::get_if<Ball>(&o)) {
      os << "{\"c\":[";
      for (std::size_t k = 0; k < b->c.size(); ++k) os << (k ? "," : "") << num(b->c[k]);
      os << "],\"r\":" << num(b->r) << '}';
    } else if (auto* t = std::get_if<Triangle>(&o)) {
      os << "{\"p\":[" << point(t->p[0]) << ',' << point(t->p[1]) << ',' << point(t->p[2]) << "]}";
    } else {
      const auto& e = std::get<Ellipse>(o);
      os << "{\"c\":" << point(e.c) << ",\"a\":" << num(e.a) << ",\"b\":" << num(e.b)
         << ",\"theta\":" << num(e.theta) << '}';
    }
  }
  os << "\n]";
  if (!inst.labels.empty()) {
    os << ",\"labels\":[";
    for (std::size_t i = 0; i < inst.labels.size(); ++i) os << (i ? "," : "") << nlohmann::json(inst.labels[i]).dump();
    os << ']';
  }
  os << "}\n";
  return os.str();
}

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + "." + key + ": missing field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw InputError(path + ": expected a number");
  return j.get<double>();
}

Vec2 point_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw InputError(path + ": expected [x, y]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

}  // namespace

GeometricInstance load_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance: malformed JSON: ") + e.what());
  }
  GeometricInstance inst;
  const json& kind = field(j, "kind", "$");
  if (!kind.is_string()) throw InputError("$.kind: expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "balls") inst.kind = ObjectKind::kBalls;
  else if (k == "triangles") inst.kind = ObjectKind::kTriangles;
  else if (k == "ellipses") inst.kind = ObjectKind::kEllipses;
  else throw InputError("$.kind: unknown kind '" + k + "'");
  const json& dim = field(j, "dim", "$");
  if (!dim.is_number_integer() || dim.get<int>() < 1) throw InputError("$.dim: expected a positive integer");
  inst.dim = dim.get<int>();
  const json& objs = field(j, "objects", "$");
  if (!objs.is_array()) throw InputError("$.objects: expected an array");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::string path = "$.objects[" + std::to_string(i) + "]";
    const json& o = objs[i];
    if (inst.kind == ObjectKind::kBalls) {
      Ball b;
      const json& c = field(o, "c", path);
      if (!c.is_array()) throw InputError(path + ".c: expected an array");
      if (static_cast<int>(c.size()) != inst.dim)
        throw InputError(path + ".c: object " + std::to_string(i) + " has " + std::to_string(c.size()) +
                         " coordinates, dim is " + std::to_string(inst.dim));
      for (std::size_t q = 0; q < c.size(); ++q) b.c.push_back(number(c[q], path + ".c[" + std::to_string(q) + "]"));
      b.r = number(field(o, "r", path), path + ".r");
      inst.objects.emplace_back(std::move(b));
    } else if (inst.kind == ObjectKind::kTriangles) {
      const json& p = field(o, "p", path);
      if (!p.is_array() || p.size() != 3) throw InputError(path + ".p: expected three points");
      Triangle t;
      for (int q = 0; q < 3; ++q) t.p[q] = point_from(p[q], path + ".p[" + std::to_string(q) + "]");
      inst.objects.emplace_back(t);
    } else {
      Ellipse e;
      e.c = point_from(field(o, "c", path), path + ".c");
      e.a = number(field(o, "a", path), path + ".a");
      e.b = number(field(o, "b", path), path + ".b");
      e.theta = number(field(o, "theta", path), path + ".theta");
      inst.objects.emplace_back(e);
    }
  }
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw InputError("$.labels: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw InputError("$.labels[" + std::to_string(i) + "]: expected a string");
      inst.labels.push_back((*it)[i].get<std::string>());
    }
  }
  try {
    validate(inst);
  } catch (const InputError& e) {
    throw InputError(std::string("$.") + e.what());
  }
  return inst;
}

}  // namespace geoclique
