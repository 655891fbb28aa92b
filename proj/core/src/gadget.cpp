#include "geoclique/gadget.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace geoclique {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

}  // namespace

Co2Subdivision co2subdivision(const Graph& g) {
  Co2Subdivision out;
  out.source = g;
  out.edges = g.edges();
  const std::size_t n = g.size(), m = out.edges.size();
  out.graph = Graph(n + 2 * m);
  for (VertexId v = 0; v < n; ++v) {
    out.role.push_back(VertexRole::kOriginal);
    out.index.push_back(v);
  }
  for (std::size_t k = 0; k < m; ++k) {
    out.role.insert(out.role.end(), {VertexRole::kPlus, VertexRole::kMinus});
    out.index.insert(out.index.end(), {k, k});
  }
  auto excluded = [&](VertexId a, VertexId b) {
    // Non-edges: v+(e)v-(e), v+(e) with e's first endpoint, v-(e) with its second.
    if (a > b) std::swap(a, b);
    if (b < n) return false;
    const std::size_t kb = (b - n) / 2;
    const Edge e = out.edges[kb];
    if (a < n) return a == (out.role[b] == VertexRole::kPlus ? e.first : e.second);
    return a + 1 == b && out.role[a] == VertexRole::kPlus;
  };
  for (VertexId a = 0; a < n + 2 * m; ++a)
    for (VertexId b = a + 1; b < n + 2 * m; ++b)
      if (!excluded(a, b)) out.graph.add_edge(a, b);
  return out;
}

std::string to_string(GadgetTarget t) {
  switch (t) {
    case GadgetTarget::kBalls4: return "balls4";
    case GadgetTarget::kBalls3Eps: return "balls3";
    case GadgetTarget::kTriangles: return "triangles";
    case GadgetTarget::kEllipses: return "ellipses";
  }
  return "?";
}

RealizationReport verify_realization(const GeometricInstance& inst, const Graph& expected, Tolerance tol) {
  if (inst.size() != expected.size())
    throw InputError("verify: instance has " + std::to_string(inst.size()) + " objects, graph has " +
                     std::to_string(expected.size()) + " vertices");
  RealizationReport r;
  r.expected = expected;
  r.computed = Graph(inst.size());
  r.min_edge_slack = r.min_nonedge_slack = kInf;
  for (VertexId u = 0; u < inst.size(); ++u)
    for (VertexId v = u + 1; v < inst.size(); ++v) {
      const Intersection x = intersects(inst.objects[u], inst.objects[v], tol);
      if (x.yes) r.computed.add_edge(u, v);
      if (x.yes != expected.adjacent(u, v)) r.mismatched.emplace_back(u, v);
      if (expected.adjacent(u, v)) {
        if (x.slack < r.min_edge_slack) {
          r.min_edge_slack = x.slack;
          r.edge_argmin = {u, v};
        }
      } else if (-x.slack < r.min_nonedge_slack) {
        r.min_nonedge_slack = -x.slack;
        r.nonedge_argmin = {u, v};
      }
    }
  r.equal = r.mismatched.empty();
  return r;
}

std::string to_json(const RealizationReport& r) {
  auto num = [](double x) {
    if (!std::isfinite(x)) return std::string("null");
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  };
  std::ostringstream os;
  os << "{\"equal\":" << (r.equal ? "true" : "false") << ",\"n\":" << r.expected.size()
     << ",\"expected_edges\":" << r.expected.edge_count() << ",\"computed_edges\":" << r.computed.edge_count()
     << ",\"mismatched\":[";
  for (std::size_t i = 0; i < r.mismatched.size(); ++i)
    os << (i ? "," : "") << "[" << r.mismatched[i].first << "," << r.mismatched[i].second << "]";
  os << "],\"min_edge_slack\":" << num(r.min_edge_slack) << ",\"min_nonedge_slack\":" << num(r.min_nonedge_slack)
     << "}";
  return os.str();
}

double snap_grid(double limit) {
  if (!(limit > 0)) throw InputError("snap_grid: limit must be positive");
  return std::ldexp(1.0, static_cast<int>(std::floor(std::log2(limit))));
}

GeometricInstance snap_to_grid(const GeometricInstance& inst, double grid) {
  auto s = [grid](double x) { return std::nearbyint(x / grid) * grid; };
  GeometricInstance out = inst;
  for (auto& o : out.objects) {
    if (auto* b = std::get_if<Ball>(&o)) {
      for (auto& x : b->c) x = s(x);
      b->r = s(b->r);
    } else if (auto* t = std::get_if<Triangle>(&o)) {
      for (auto& p : t->p) p = {s(p.x), s(p.y)};
    } else {
      auto& e = std::get<Ellipse>(o);
      e.c = {s(e.c.x), s(e.c.y)};
      e.a = s(e.a);
      e.b = s(e.b);
      e.theta = s(e.theta);
    }
  }
  return out;
}

namespace {

// Deterministic grid search: the candidate with the largest verified margin wins,
// ties to the first candidate.
struct Candidate {
  GeometricInstance inst;
  ConstructionParams params;
  double margin = -kInf;
};

double margin_of(const GeometricInstance& inst, const Graph& expected) {
  const RealizationReport r = verify_realization(inst, expected);
  return r.equal ? r.min_slack() : -kInf;
}

void consider(Candidate& best, GeometricInstance inst, ConstructionParams p, const Graph& expected) {
  const double m = margin_of(inst, expected);
  if (m > best.margin) best = {std::move(inst), std::move(p), m};
}

Realization finish(Candidate best, const Graph& expected, const GadgetOptions& opt, const std::string& what) {
  Realization out;
  out.params = best.params;
  out.params.margin = best.margin;
  if (!std::isfinite(best.margin) && expected.size() > 1) {
    const RealizationReport r = verify_realization(best.inst, expected);
    const Edge e = r.mismatched.empty() ? r.argmin() : r.mismatched.front();
    throw RealizationError(what + ": no candidate parameters realize the graph", e, r.min_slack());
  }
  out.instance = std::move(best.inst);
  if (opt.snap && expected.size() > 1) {
    out.params.grid = snap_grid(best.margin / 10);
    out.instance = snap_to_grid(out.instance, out.params.grid);
  }
  out.report = verify_realization(out.instance, expected);
  if (!out.report.equal) {
    const Edge e = out.report.mismatched.front();
    throw RealizationError(what + ": snapped instance disagrees on pair (" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + ")",
                           e, out.report.min_slack());
  }
  if (expected.size() > 1 && out.report.min_slack() <= opt.min_margin) {
    const Edge e = out.report.argmin();
    std::ostringstream os;
    os << what << ": margin underflow, pair (" << e.first << "," << e.second << ") has slack "
       << out.report.min_slack() << " <= " << opt.min_margin;
    throw RealizationError(os.str(), e, out.report.min_slack());
  }
  return out;
}

// ---- 4D unit balls ----------------------------------------------------------

GeometricInstance build_balls4(const Co2Subdivision& co, double eps, double eps1, double arc) {
  const std::size_t n = co.source.size(), m = co.edges.size();
  GeometricInstance inst;
  inst.kind = ObjectKind::kBalls;
  inst.dim = 4;
  std::vector<std::array<double, 2>> dir(n);  // unit direction of p(v) in the (z,t) plane
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = n == 1 ? 0 : -arc / 2 + arc * static_cast<double>(i) / static_cast<double>(n - 1);
    dir[i] = {std::cos(phi), std::sin(phi)};
    inst.objects.push_back(Ball{{0, 0, (kSqrt3 - eps) * dir[i][0], (kSqrt3 - eps) * dir[i][1]}, 1});
  }
  for (std::size_t k = 0; k < m; ++k) {
    const double th = kPi * (static_cast<double>(k) + 0.5) / static_cast<double>(m);
    const auto [u, v] = co.edges[k];
    const double push = eps + eps1;
    inst.objects.push_back(Ball{{std::cos(th), std::sin(th), -push * dir[u][0], -push * dir[u][1]}, 1});
    inst.objects.push_back(Ball{{-std::cos(th), -std::sin(th), -push * dir[v][0], -push * dir[v][1]}, 1});
  }
  return inst;
}

Candidate search_balls4(const Co2Subdivision& co) {
  Candidate best;
  for (double arc : {0.3, 0.5, 0.7, 0.9, 1.1, 1.25})
    for (int a = 0; a < 20; ++a) {
      const double eps = 0.004 * std::pow(1.25, a);
      for (int b = 0; b < 14; ++b) {
        const double eps1 = eps * 1e-4 * std::pow(2.0, b);
        ConstructionParams p;
        p.eps = eps;
        p.eps_prime = eps1;
        p.aux = {{"arc", arc}};
        consider(best, build_balls4(co, eps, eps1, arc), p, co.graph);
      }
    }
  return best;
}

// ---- 3D balls with radii in [1, 1 + radius_eps] --------------------------------

// Smallest mu >= 0 with |w + mu g| = r (w outside or on the sphere of radius r), or +inf.
double reach(const std::array<double, 3>& w, const std::array<double, 3>& g, double r) {
  double wg = 0, ww = 0;
  for (int i = 0; i < 3; ++i) {
    wg += w[i] * g[i];
    ww += w[i] * w[i];
  }
  const double disc = wg * wg - (ww - r * r);
  if (disc < 0) return kInf;
  return -wg + std::sqrt(disc);
}

std::optional<GeometricInstance> build_balls3(const Co2Subdivision& co, double eps1, double eps2) {
  const std::size_t n = co.source.size(), m = co.edges.size();
  GeometricInstance inst;
  inst.kind = ObjectKind::kBalls;
  inst.dim = 3;
  std::vector<double> h(n), r(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = kSqrt3 + static_cast<double>(i + 1) * eps1;
    r[i] = std::sqrt(1 + h[i] * h[i]) - 1 + eps2;
    inst.objects.push_back(Ball{{0, 0, h[i]}, r[i]});
  }
  for (std::size_t k = 0; k < m; ++k) {
    const double th = kPi * (static_cast<double>(k) + 0.5) / static_cast<double>(m);
    for (int side = 0; side < 2; ++side) {
      const double sgn = side == 0 ? 1 : -1;
      const std::array<double, 3> pi{sgn * std::cos(th), sgn * std::sin(th), 0};
      const VertexId owner = side == 0 ? co.edges[k].first : co.edges[k].second;
      // Push pi away from p(owner) just enough to leave its ball, staying inside the others.
      std::array<double, 3> g{pi[0], pi[1], pi[2] - h[owner]};
      const double len = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
      for (auto& x : g) x /= len;
      const double lo = reach({pi[0], pi[1], pi[2] - h[owner]}, g, 1 + r[owner]);
      double hi = kInf;
      for (std::size_t w = 0; w < n; ++w)
        if (w != owner) hi = std::min(hi, reach({pi[0], pi[1], pi[2] - h[w]}, g, 1 + r[w]));
      if (!(lo < hi)) return std::nullopt;
      const double mu = std::isfinite(hi) ? 0.5 * (lo + hi) : lo + eps2;
      inst.objects.push_back(Ball{{pi[0] + mu * g[0], pi[1] + mu * g[1], pi[2] + mu * g[2]}, 1});
    }
  }
  return inst;
}

Candidate search_balls3(const Co2Subdivision& co, double radius_eps) {
  if (!(radius_eps > 0)) throw InputError("balls3: radius epsilon must be positive");
  const std::size_t n = co.source.size();
  Candidate best;
  for (int a = 1; a <= 24; ++a) {
    // Share of the radius budget spent on spreading the centers along the axis.
    const double share = a / 25.0;
    const double top = std::sqrt(1 + std::pow(kSqrt3, 2));
    const double budget = radius_eps * 0.999;
    // r_n - 1 = sqrt(1 + (sqrt3 + n eps1)^2) - 2 + eps2 <= budget
    const double spread_r = budget * share;
    const double hn = std::sqrt(std::pow(top + spread_r, 2) - 1);
    const double eps1 = n == 0 ? 0 : (hn - kSqrt3) / static_cast<double>(n);
    for (int b = 0; b < 16; ++b) {
      const double eps2 = budget * (1 - share) * std::pow(0.7, b);
      auto inst = build_balls3(co, eps1, eps2);
      if (!inst) continue;
      ConstructionParams p;
      p.eps = radius_eps;
      p.eps_prime = eps1;
      p.eps_second = eps2;
      consider(best, std::move(*inst), p, co.graph);
    }
  }
  return best;
}

// ---- filled triangles ------------------------------------------------------------

Vec2 line_meet(Vec2 p, Vec2 d, Vec2 q, Vec2 e) {
  const double t = cross(q - p, e) / cross(d, e);
  return p + t * d;
}

GeometricInstance build_triangles(const Co2Subdivision& co, double eps, double sigma) {
  const std::size_t n = co.source.size(), m = co.edges.size();
  GeometricInstance inst;
  inst.kind = ObjectKind::kTriangles;
  auto P = [](double i) { return Vec2{i, i * i}; };
  const Vec2 apex{static_cast<double>(n) + 1, 0};
  for (std::size_t i = 1; i <= n; ++i) {
    const Vec2 p = P(static_cast<double>(i));
    inst.objects.push_back(Triangle{{p, Vec2{p.x, -p.y}, apex}});
  }
  const double W = std::pow(static_cast<double>(n) + 1, 2) + 10;
  for (std::size_t k = 0; k < m; ++k) {
    const double ang = eps * static_cast<double>(k + 1);
    const Vec2 hd{std::cos(ang), std::sin(ang)};
    for (int side = 0; side < 2; ++side) {
      const double sgn = side == 0 ? 1 : -1;
      const double i = static_cast<double>((side == 0 ? co.edges[k].first : co.edges[k].second) + 1);
      // Chord of the (mirrored) chain through the two neighbours, pulled half a unit towards p_i.
      const Vec2 a = P(i - 1), b = P(i + 1);
      const Vec2 base{a.x, sgn * (a.y - 0.5)};
      const Vec2 dir{b.x - a.x, sgn * (b.y - a.y)};
      const Vec2 h0{0, sgn * sigma};
      const Vec2 B = line_meet(base, dir, h0, hd);
      const Vec2 A = line_meet(base, dir, Vec2{10 * W, 0}, Vec2{0, 1});
      const Vec2 C = line_meet(h0, hd, Vec2{-W, 0}, Vec2{0, 1});
      inst.objects.push_back(Triangle{{A, B, C}});
    }
  }
  return inst;
}

Candidate search_triangles(const Co2Subdivision& co) {
  const std::size_t m = std::max<std::size_t>(co.edges.size(), 1);
  const double eps = (kPi / 4) / (4 * static_cast<double>(m));
  Candidate best;
  for (double f : {1.0 / 160, 1.0 / 80, 1.0 / 40, 1.0 / 20, 1.0 / 10}) {
    ConstructionParams p;
    p.eps = eps;
    p.eps_prime = std::tan(eps) * f;
    consider(best, build_triangles(co, eps, p.eps_prime), p, co.graph);
  }
  return best;
}

// ---- filled ellipses -------------------------------------------------------------

// Filled ellipse tangent to the line {nA.(x - A) = 0} at A and to {nB.(x - B) = 0}
// at B, lying where both forms are positive; least eccentric member of the pencil
// T_A T_B - k L^2.
std::optional<Ellipse> tangent_ellipse(Vec2 A, Vec2 nA, Vec2 B, Vec2 nB) {
  const Vec2 ab = B - A;
  const Vec2 nL = (1 / norm(ab)) * Vec2{-ab.y, ab.x};
  const double a0 = -dot(nA, A), b0 = -dot(nB, B), l0 = -dot(nL, A);
  const double S00 = nA.x * nB.x, S11 = nA.y * nB.y, S01 = 0.5 * (nA.x * nB.y + nA.y * nB.x);
  const double detS = S00 * S11 - S01 * S01;
  // n^T adj(S) n
  const double q = nL.x * nL.x * S11 - 2 * nL.x * nL.y * S01 + nL.y * nL.y * S00;
  if (!(detS < 0 && q < 0)) return std::nullopt;
  const double k0 = detS / q;
  auto make = [&](double k) -> std::optional<Ellipse> {
    const double M00 = S00 - k * nL.x * nL.x, M11 = S11 - k * nL.y * nL.y, M01 = S01 - k * nL.x * nL.y;
    const double bx = 0.5 * (a0 * nB.x + b0 * nA.x) - k * l0 * nL.x;
    const double by = 0.5 * (a0 * nB.y + b0 * nA.y) - k * l0 * nL.y;
    const double c = a0 * b0 - k * l0 * l0;
    const double det = M00 * M11 - M01 * M01;
    if (!(det > 0) || !(M00 + M11 < 0)) return std::nullopt;
    const Vec2 x0{-(M11 * bx - M01 * by) / det, -(-M01 * bx + M00 * by) / det};
    const double f0 = c + bx * x0.x + by * x0.y;
    if (!(f0 > 0)) return std::nullopt;
    // Eigenvalues of -M.
    const double p = -M00, r = -M11, s = -M01;
    const double mean = 0.5 * (p + r), rad = std::hypot(0.5 * (p - r), s);
    const double lmin = mean - rad, lmax = mean + rad;
    if (!(lmin > 0)) return std::nullopt;
    Ellipse e;
    e.c = x0;
    e.a = std::sqrt(f0 / lmin);
    e.b = std::sqrt(f0 / lmax);
    e.theta = 0.5 * std::atan2(2 * s, p - r) + kPi / 2;  // major axis is the lmin eigenvector
    return e;
  };
  auto score = [&](double u) {
    auto e = make(k0 * (1 + std::exp(u)));
    return e ? e->b / e->a : -1.0;
  };
  double lo = -20, hi = 20;
  const double g = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = score(x1), f2 = score(x2);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = score(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = score(x1);
    }
  }
  return make(k0 * (1 + std::exp(0.5 * (lo + hi))));
}

std::optional<GeometricInstance> build_ellipses(const Co2Subdivision& co, double rho, double h, double nu,
                                                double sigma, double* eps_out) {
  const std::size_t n = co.source.size(), m = co.edges.size();
  const Vec2 P{kSqrt3 / 2, 0.5};
  const Vec2 cc = P + rho * Vec2{-kSqrt3 / 2, 0.5};
  std::vector<Vec2> p(n + 2);
  for (std::size_t i = 0; i < n + 2; ++i) {
    const double psi = -kPi / 6 - static_cast<double>(i) * h / rho;
    p[i] = cc + rho * Vec2{std::cos(psi), std::sin(psi)};
    if (p[i].y <= 0) return std::nullopt;
  }
  const Vec2 d01 = p[0] - p[1];
  const double eps = std::atan2(d01.y, d01.x) / (4 * static_cast<double>(std::max<std::size_t>(m, 1)));
  if (eps_out) *eps_out = eps;
  GeometricInstance inst;
  inst.kind = ObjectKind::kEllipses;
  std::vector<Vec2> out_n(n + 2), tangent_at(n + 2);
  for (std::size_t i = 1; i <= n; ++i) {
    const Vec2 d = p[i + 1] - p[i - 1];
    const double cx = p[i].x + p[i].y * d.y / d.x;
    const Vec2 c{cx, 0};
    const double r = norm(p[i] - c);
    inst.objects.push_back(Ellipse{c, r, r, 0});
    out_n[i] = (1 / r) * (p[i] - c);
    tangent_at[i] = p[i] + nu * out_n[i];
  }
  for (std::size_t k = 0; k < m; ++k) {
    const double ang = eps * static_cast<double>(k + 1);
    const Vec2 up{-std::sin(ang), std::cos(ang)};
    const std::size_t i = co.edges[k].first + 1, j = co.edges[k].second + 1;
    auto ep = tangent_ellipse(tangent_at[i], out_n[i], Vec2{0, sigma}, up);
    auto em = tangent_ellipse(Vec2{tangent_at[j].x, -tangent_at[j].y}, Vec2{out_n[j].x, -out_n[j].y},
                              Vec2{0, -sigma}, -1.0 * up);
    if (!ep || !em) return std::nullopt;
    inst.objects.push_back(*ep);
    inst.objects.push_back(*em);
  }
  return inst;
}

Candidate search_ellipses(const Co2Subdivision& co) {
  const std::size_t m = std::max<std::size_t>(co.edges.size(), 1);
  Candidate best;
  for (double rho : {0.15, 0.25, 0.4, 0.6})
    for (double h : {0.003, 0.006, 0.012, 0.024})
      for (double fn : {0.25, 0.5}) {
        const double nu = fn * (0.5 / rho - 0.5) * h * h;
        // Angle step is about (pi/3)/(4m); the pairs near the origin overlap by ~step^2/4.
        const double step = (kPi / 3) / (4 * static_cast<double>(m));
        for (double fs : {1.0 / 32, 1.0 / 16}) {
          const double sigma = fs * step * step;
          double eps = 0;
          auto inst = build_ellipses(co, rho, h, nu, sigma, &eps);
          if (!inst) continue;
          ConstructionParams p;
          p.eps = eps;
          p.eps_prime = nu;
          p.eps_second = sigma;
          p.aux = {{"rho", rho}, {"h", h}};
          consider(best, std::move(*inst), p, co.graph);
        }
      }
  return best;
}

}  // namespace

Realization realize_co2subdivision(const Graph& g, GadgetTarget target, const GadgetOptions& opt) {
  if (g.weighted()) throw InputError("gadget: source graph must be unweighted");
  const Co2Subdivision co = co2subdivision(g);
  Candidate best;
  switch (target) {
    case GadgetTarget::kBalls4: best = search_balls4(co); break;
    case GadgetTarget::kBalls3Eps: best = search_balls3(co, opt.radius_eps); break;
    case GadgetTarget::kTriangles: best = search_triangles(co); break;
    case GadgetTarget::kEllipses: best = search_ellipses(co); break;
  }
  return finish(std::move(best), co.graph, opt, to_string(target));
}

}  // namespace geoclique

namespace geoclique {

namespace {

struct Disk {
  Vec2 c;
  double r = 0;
};

Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }
Vec2 unit(Vec2 v) { return (1 / norm(v)) * v; }

// Centre of a disk of radius r touching disks a and b from outside, on the side
// of the line a->b given by `left`.
Vec2 touching_both(const Disk& a, const Disk& b, double r, bool left) {
  const double ra = a.r + r, rb = b.r + r;
  const Vec2 d = b.c - a.c;
  const double L = norm(d);
  const double x = (L * L + ra * ra - rb * rb) / (2 * L);
  const double h = std::sqrt(std::max(0.0, ra * ra - x * x));
  const Vec2 u = (1 / L) * d;
  return a.c + x * u + (left ? h : -h) * rot90(u);
}

struct OddSlot {
  std::size_t slot;  // 1-based index within the cycle
  Vec2 touch;        // tangency point, already lifted by the separation
  Vec2 n;            // unit normal pointing into the disk
  std::size_t skip_a, skip_b;
};

struct CycleLayout {
  std::vector<std::optional<Disk>> disks;  // 1-based slots; index 0 unused
  std::vector<OddSlot> odd;
  Vec2 Z;
  double R = 0;
};

// Chain from p1 to ps sagging by `depth` in the middle, on the side opposite to `up`.
std::vector<Vec2> sag_chain(Vec2 p1, Vec2 ps, std::size_t s, double depth, Vec2 up) {
  std::vector<Vec2> p(s + 1);
  for (std::size_t k = 1; k <= s; ++k) {
    const double t = s == 1 ? 0 : static_cast<double>(k - 1) / static_cast<double>(s - 1);
    p[k] = p1 + t * (ps - p1) - (4 * depth * t * (1 - t)) * up;
  }
  return p;
}

// Disks 2..2s on the chain, and the odd slots 3..2s-1 above the co-tangents.
void chain_disks(CycleLayout& L, const std::vector<Vec2>& p, std::size_t s, double R, double nu) {
  const Vec2 e = unit(p[s] - p[1]);
  for (std::size_t k = 2; k + 1 <= s; ++k) {
    const Vec2 up = unit(rot90(p[k + 1] - p[k - 1]));
    L.disks[2 * k] = Disk{p[k] - R * up, R};
  }
  for (std::size_t k = 1; k < s; ++k) {
    const Disk& a = *L.disks[2 * k];
    const Disk& b = *L.disks[2 * k + 2];
    const Vec2 u = unit(b.c - a.c), n = rot90(u);
    const Vec2 base = a.c + a.r * n;
    const double target = 0.5 * (dot(e, p[k]) + dot(e, p[k + 1]));
    const Vec2 T = base + ((target - dot(e, base)) / dot(e, u)) * u;
    L.odd.push_back({2 * k + 1, T + nu * n, n, 2 * k, 2 * k + 2});
  }
}

CycleLayout even_layout(std::size_t len, double R) {
  const std::size_t s = len / 2;
  CycleLayout L;
  L.disks.resize(len + 1);
  L.R = R;
  const double eps = R / 1000;
  const double y1 = std::sqrt(4 * R * R - eps * eps / 4);
  const double depth = R - y1 / 2;  // sliver of the touching D_1 below the chord
  const double zeta = depth / 10;
  const Vec2 c2{-eps / 2, 0}, c2s{eps / 2, 0};
  L.disks[1] = Disk{{0, y1 + zeta}, R};
  L.disks[2] = Disk{c2, R};
  L.disks[2 * s] = Disk{c2s, R};
  const Vec2 p1{-eps / 4, y1 / 2}, ps{eps / 4, y1 / 2};
  L.Z = 0.5 * (p1 + ps);
  chain_disks(L, sag_chain(p1, ps, s, (depth - zeta) / 3, {0, 1}), s, R, zeta);
  return L;
}

CycleLayout odd_layout(std::size_t len, double R, double big) {
  const std::size_t s = (len - 1) / 2;
  CycleLayout L;
  L.disks.resize(len + 1);
  L.R = R;
  const double eps = R / 1000;
  const double depth = eps * eps / (32 * R);
  const double zeta = depth / 10;
  if (s == 1) {
    const Disk d2{{0, 0}, R};
    const Disk d1{{0, 2 * R + zeta}, R};
    L.disks[1] = d1;
    L.disks[2] = d2;
    L.Z = {0, R + zeta / 2};
  } else {
    const Disk d2{{-eps / 2, 0}, R}, d2s{{eps / 2, 0}, R};
    // D_1 misses D_2 by zeta and overlaps D_2s by zeta.
    const Disk d1{touching_both(Disk{d2.c, R + zeta}, Disk{d2s.c, R - zeta}, R, true), R};
    L.disks[1] = d1;
    L.disks[2] = d2;
    L.disks[2 * s] = d2s;
    const Vec2 p1 = d2.c + R * unit(d1.c - d2.c), ps = d2s.c + R * unit(d1.c - d2s.c);
    L.Z = 0.5 * (p1 + ps);
    const Vec2 up = unit(rot90(ps - p1));
    const double sliver = R - std::abs(dot(d1.c - p1, up));
    chain_disks(L, sag_chain(p1, ps, s, (sliver - zeta) / 3, up), s, R, zeta);
  }
  // Huge disk on the left touching D_1 and D_2s, then pulled away from both.
  const Disk& d1 = *L.disks[1];
  const Disk& d2s = *L.disks[2 * s];
  Vec2 c = touching_both(d2s, d1, big, true);
  c = c + zeta * unit(c - 0.5 * (d1.c + d2s.c));
  L.disks[2 * s + 1] = Disk{c, big};
  return L;
}

Disk place(const Disk& d, Vec2 Z, double angle) { return Disk{rotate(d.c - Z, angle), d.r}; }

}  // namespace

Graph cycle_union_complement(const std::vector<std::size_t>& evens, std::optional<std::size_t> odd) {
  std::vector<std::size_t> lens = evens;
  if (odd) lens.push_back(*odd);
  std::size_t n = 0;
  for (auto l : lens) n += l;
  Graph cyc(n);
  std::size_t off = 0;
  for (auto l : lens) {
    for (std::size_t t = 0; t < l; ++t) cyc.add_edge(off + t, off + (t + 1) % l);
    off += l;
  }
  return complement(cyc);
}

Realization realize_co_cycles_disks(const std::vector<std::size_t>& evens, std::optional<std::size_t> odd,
                                    const GadgetOptions& opt) {
  for (auto l : evens)
    if (l < 4 || l % 2) throw InputError("cocycles: even cycle lengths must be even and at least 4");
  if (odd && (*odd < 3 || *odd % 2 == 0)) throw InputError("cocycles: the odd cycle length must be odd and at least 3");
  const Graph expected = cycle_union_complement(evens, odd);

  constexpr double kEvenR = 1e5, kOddR = 1e4, kBigR = 1e7;
  std::vector<CycleLayout> layouts;
  std::vector<double> angles;
  for (std::size_t j = 0; j < evens.size(); ++j) {
    layouts.push_back(even_layout(evens[j], kEvenR));
    angles.push_back(static_cast<double>(j) * (kPi / 3) / static_cast<double>(evens.size() + 1));
  }
  if (odd) {
    layouts.push_back(odd_layout(*odd, kOddR, kBigR));
    angles.push_back(kPi / 3);
  }
  // Global placement of everything but the odd slots above the co-tangents.
  std::vector<std::vector<std::optional<Disk>>> placed(layouts.size());
  for (std::size_t c = 0; c < layouts.size(); ++c) {
    placed[c].resize(layouts[c].disks.size());
    for (std::size_t t = 1; t < layouts[c].disks.size(); ++t)
      if (layouts[c].disks[t]) placed[c][t] = place(*layouts[c].disks[t], layouts[c].Z, angles[c]);
  }
  std::vector<std::size_t> offset(layouts.size(), 0);
  for (std::size_t c = 1; c < layouts.size(); ++c) offset[c] = offset[c - 1] + layouts[c - 1].disks.size() - 1;
  // Smallest radius of a disk tangent to the line at T (normal n) reaching disk X.
  for (std::size_t c = 0; c < layouts.size(); ++c)
    for (const auto& o : layouts[c].odd) {
      const Vec2 T = rotate(o.touch - layouts[c].Z, angles[c]);
      const Vec2 n = rotate(o.n, angles[c]);
      double need = 0;
      for (std::size_t c2 = 0; c2 < layouts.size(); ++c2)
        for (std::size_t t = 1; t < placed[c2].size(); ++t) {
          if (!placed[c2][t] || (c2 == c && (t == o.skip_a || t == o.skip_b))) continue;
          const Disk& X = *placed[c2][t];
          const double h = dot(n, T - X.c);
          const double num = dot(T - X.c, T - X.c) - X.r * X.r;
          if (num <= 0) continue;
          if (X.r - h <= 0)
            throw RealizationError("cocycles: tangent line misses a disk that must be reached",
                                   {offset[c] + o.slot - 1, offset[c2] + t - 1}, h - X.r);
          need = std::max(need, num / (2 * (X.r - h)));
        }
      // Nothing to reach (T already inside every required disk): fall back to the cycle radius.
      const double rho = need > 0 ? 1.01 * need : layouts[c].R;
      placed[c][o.slot] = Disk{T + rho * n, rho};
    }
  GeometricInstance inst;
  inst.kind = ObjectKind::kBalls;
  inst.dim = 2;
  for (std::size_t c = 0; c < layouts.size(); ++c)
    for (std::size_t t = 1; t < placed[c].size(); ++t) {
      const Disk& d = *placed[c][t];
      inst.objects.push_back(Ball{{d.c.x, d.c.y}, d.r});
    }
  Candidate best;
  best.inst = std::move(inst);
  best.margin = margin_of(best.inst, expected);
  best.params.eps = kEvenR / 1000;
  best.params.aux = {{"R_even", kEvenR}, {"R_odd", kOddR}, {"R_big", kBigR}};
  return finish(std::move(best), expected, opt, "cocycles");
}

Realization realize_co_cycles_disks(const std::vector<std::size_t>& lengths, const GadgetOptions& opt) {
  std::vector<std::size_t> evens;
  std::optional<std::size_t> odd;
  for (auto l : lengths) {
    if (l % 2 == 0) {
      evens.push_back(l);
      continue;
    }
    // Two anticomplete odd cycles cannot occur in the complement of a disk graph.
    if (odd) throw InputError("cocycles: at most one odd cycle can be realized by disks");
    odd = l;
  }
  return realize_co_cycles_disks(evens, odd, opt);
}

}  // namespace geoclique
