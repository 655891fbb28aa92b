#include "geoclique/structural.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geoclique/rng.hpp"

namespace geoclique {

namespace {

struct CycleSearch {
  const Graph& g;
  std::size_t max_len;
  std::vector<VertexId> path;
  // Returning true stops the search.
  template <class F>
  bool extend(Bitset& blocked, F&& on_cycle) {
    const std::size_t n = g.size();
    const VertexId s = path.front(), last = path.back();
    const Bitset& row = g.neighbors(last);
    for (VertexId w = row.next(s + 1); w < n; w = row.next(w + 1)) {
      if (blocked.test(w)) continue;
      if (path.size() >= 2 && g.adjacent(s, w)) {
        // Closing the cycle at w; p1 < w keeps one orientation.
        if (path.size() % 2 == 0 && path[1] < w) {
          path.push_back(w);
          const bool stop = on_cycle(path);
          path.pop_back();
          if (stop) return true;
        }
        continue;
      }
      if (path.size() + 1 >= max_len) continue;
      Bitset saved = blocked;
      if (path.size() >= 2) blocked |= g.closed_neighbors(last);
      else blocked.set(last);
      path.push_back(w);
      const bool stop = extend(blocked, on_cycle);
      path.pop_back();
      blocked = std::move(saved);
      if (stop) return true;
    }
    return false;
  }

  template <class F>
  void run(F&& on_cycle) {
    for (VertexId s = 0; s < g.size(); ++s) {
      path.assign(1, s);
      Bitset blocked(g.size());
      blocked.set(s);
      if (extend(blocked, on_cycle)) return;
    }
  }
};

}  // namespace

std::vector<std::vector<VertexId>> induced_odd_cycles(const Graph& g, std::size_t max_len) {
  std::vector<std::vector<VertexId>> out;
  CycleSearch cs{g, max_len, {}};
  cs.run([&](const std::vector<VertexId>& c) {
    out.push_back(c);
    return false;
  });
  return out;
}

IocpWitness find_two_anticomplete_odd_cycles(const Graph& g, std::size_t cap) {
  IocpWitness w;
  w.cap = cap == 0 ? g.size() : cap;
  w.exhaustive = w.cap >= g.size();
  if (two_color(g).bipartite()) return w;
  CycleSearch cs{g, w.cap, {}};
  cs.run([&](const std::vector<VertexId>& c) {
    InducedSubgraph rest = induced(g, g.all() - closed_neighborhood(g, c));
    auto other = shortest_odd_cycle(rest.graph);
    if (!other || other->size() > w.cap) return false;
    w.found = true;
    w.first = c;
    for (auto v : *other) w.second.push_back(rest.to_parent[v]);
    return true;
  });
  return w;
}

bool verify_witness(const Graph& g, const IocpWitness& w) {
  if (!w.found) return true;
  for (const auto* c : {&w.first, &w.second})
    if (!is_odd_cycle(g, *c) || !is_chordless_cycle(g, *c)) return false;
  for (auto u : w.first)
    for (auto v : w.second)
      if (u == v || g.adjacent(u, v)) return false;
  return true;
}

int vc_dimension(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kVcDimensionCap) throw CapExceeded("vc_dimension", n, kVcDimensionCap);
  if (n == 0) return 0;
  std::vector<std::uint32_t> nb(n, 0);
  for (VertexId v = 0; v < n; ++v) g.neighbors(v).for_each([&](std::size_t u) { nb[v] |= 1u << u; });
  int best = 0;
  std::vector<char> seen;
  for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
    bool any = false;
    // Enumerate k-subsets X as bitmasks in increasing order (Gosper's hack).
    for (std::uint32_t x = (1u << k) - 1; x < (1u << n) && !any;) {
      seen.assign(std::size_t{1} << k, 0);
      std::size_t distinct = 0;
      for (VertexId v = 0; v < n && distinct < seen.size(); ++v) {
        const std::uint32_t tr = nb[v] & x;
        std::size_t idx = 0, bit = 0;
        for (std::uint32_t m = x; m; m &= m - 1, ++bit)
          if (tr & (m & -m)) idx |= std::size_t{1} << bit;
        if (!seen[idx]) {
          seen[idx] = 1;
          ++distinct;
        }
      }
      if (distinct == seen.size()) any = true;
      const std::uint32_t c = x & -x, r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
    if (!any) break;
    best = static_cast<int>(k);
  }
  return best;
}

namespace {

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  return snapped_orientation(a, b, c) * snapped_orientation(a, b, d) < 0 &&
         snapped_orientation(c, d, a) * snapped_orientation(c, d, b) < 0;
}

bool line_meets_segment(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  return snapped_orientation(a, b, c) * snapped_orientation(a, b, d) <= 0;
}

}  // namespace

K22Verdict check_k22_quadrilateral(const std::array<Ball, 4>& disks,
                                   const std::array<std::pair<int, int>, 2>& nonedges) {
  std::array<int, 4> hits{};
  for (auto [u, v] : nonedges) {
    if (u < 0 || u > 3 || v < 0 || v > 3 || u == v) throw InputError("k22: non-edge pair out of range");
    ++hits[u];
    ++hits[v];
  }
  if (hits != std::array<int, 4>{1, 1, 1, 1}) throw InputError("k22: non-edges must be two disjoint pairs");
  for (const auto& d : disks)
    if (d.c.size() != 2) throw InputError("k22: expects planar disks");
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      const bool non = (nonedges[0] == std::pair{u, v} || nonedges[0] == std::pair{v, u} ||
                        nonedges[1] == std::pair{u, v} || nonedges[1] == std::pair{v, u});
      const bool yes = intersects(disks[u], disks[v]).yes;
      if (yes == non)
        throw InputError("k22: disks " + std::to_string(u) + " and " + std::to_string(v) +
                         (non ? " intersect but are a stated non-edge" : " are disjoint but should intersect"));
    }
  auto c = [&](int i) { return Vec2{disks[i].c[0], disks[i].c[1]}; };
  const Vec2 a = c(nonedges[0].first), b = c(nonedges[0].second);
  const Vec2 p = c(nonedges[1].first), q = c(nonedges[1].second);
  K22Verdict v;
  v.diagonal_nonedges = segments_cross(a, b, p, q);
  v.convex = v.diagonal_nonedges || segments_cross(a, p, b, q) || segments_cross(a, q, b, p);
  v.line_condition = line_meets_segment(a, b, p, q) || line_meets_segment(p, q, a, b);
  v.holds = v.line_condition && (!v.convex || v.diagonal_nonedges);
  return v;
}

bool CrossingProfile::invariants_hold() const {
  for (auto x : a)
    if (x % 2) return false;
  for (auto x : a2)
    if (x % 2) return false;
  return sum_c % 2 == 0 && sum_c == sum_c2 && sum_b == sum_a2 && sum_b2 == sum_a;
}

namespace {

bool generic_against(const Chain2& lines, const Chain2& points) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Vec2 p = lines[i], q = lines[(i + 1) % lines.size()];
    if (p == q) return false;
    for (auto x : points)
      if (snapped_orientation(p, q, x) == 0) return false;
  }
  return true;
}

double snap40(double x) { return std::ldexp(std::nearbyint(std::ldexp(x, 40)), -40); }

}  // namespace

bool in_general_position(const Chain2& c1, const Chain2& c2) { return generic_against(c1, c2) && generic_against(c2, c1); }

CrossingProfile crossing_profile(const Chain2& chain1, const Chain2& chain2, std::uint64_t seed) {
  if (chain1.size() < 3 || chain2.size() < 3) throw InputError("crossing_profile: chains need at least 3 vertices");
  CrossingProfile cp;
  cp.chain1 = chain1;
  cp.chain2 = chain2;
  for (auto* ch : {&cp.chain1, &cp.chain2})
    for (auto& p : *ch) p = {snap40(p.x), snap40(p.y)};
  Rng rng(seed);
  while (!in_general_position(cp.chain1, cp.chain2)) {
    if (cp.attempts == 8) throw InputError("crossing_profile: still degenerate after 8 perturbations");
    ++cp.attempts;
    cp.chain1 = chain1;
    cp.chain2 = chain2;
    for (auto* ch : {&cp.chain1, &cp.chain2})
      for (auto& p : *ch) p = {snap40(p.x + rng.uniform(-1e-7, 1e-7)), snap40(p.y + rng.uniform(-1e-7, 1e-7))};
  }
  auto crosses_line = [](Vec2 p, Vec2 q, Vec2 x, Vec2 y) {
    return snapped_orientation(p, q, x) * snapped_orientation(p, q, y) < 0;
  };
  auto fill = [&](const Chain2& A, const Chain2& B, std::vector<long>& va, std::vector<long>& vb, std::vector<long>& vc) {
    const std::size_t s = A.size(), t = B.size();
    va.assign(s, 0);
    vb.assign(s, 0);
    vc.assign(s, 0);
    for (std::size_t i = 0; i < s; ++i) {
      const Vec2 p = A[i], q = A[(i + 1) % s];
      for (std::size_t j = 0; j < t; ++j) {
        const Vec2 x = B[j], y = B[(j + 1) % t];
        const bool la = crosses_line(p, q, x, y);  // l(S_i) meets S'_j
        const bool lb = crosses_line(x, y, p, q);  // l(S'_j) meets S_i
        va[i] += la;
        vb[i] += lb;
        vc[i] += la && lb;
      }
    }
  };
  fill(cp.chain1, cp.chain2, cp.a, cp.b, cp.c);
  fill(cp.chain2, cp.chain1, cp.a2, cp.b2, cp.c2);
  auto sum = [](const std::vector<long>& v) {
    long s = 0;
    for (auto x : v) s += x;
    return s;
  };
  cp.sum_a = sum(cp.a);
  cp.sum_b = sum(cp.b);
  cp.sum_c = sum(cp.c);
  cp.sum_a2 = sum(cp.a2);
  cp.sum_b2 = sum(cp.b2);
  cp.sum_c2 = sum(cp.c2);
  return cp;
}

double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
Vec3 normalized(Vec3 a) { return (1 / norm(a)) * a; }
double angle_between(Vec3 a, Vec3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

Vec3 needle_direction(const Chain3& chain, const NeedleLeg& leg, double tau) {
  const std::size_t p = chain.size();
  const Vec3 fixed = chain[(leg.k + 1) % p];
  const Vec3 m = (1 - tau) * chain[leg.k % p] + tau * chain[(leg.k + 2) % p];
  return leg.sign * normalized(fixed - m);
}

DirectionCurve needle_curve(const Chain3& chain, std::size_t samples_per_leg) {
  const std::size_t p = chain.size();
  if (p < 3 || p % 2 == 0) throw InputError("needle_curve: chain needs an odd number (>= 3) of vertices");
  if (samples_per_leg < 1) throw InputError("needle_curve: need at least one sample per leg");
  DirectionCurve out;
  double sign = 1;
  for (std::size_t k = 0; k < 2 * p; ++k, sign = -sign) {
    NeedleLeg leg{k, sign, {}, {}};
    const Vec3 fixed = chain[(k + 1) % p];
    const Vec3 d0 = fixed - chain[k % p], d1 = fixed - chain[(k + 2) % p];
    if (norm(d0) == 0 || norm(d1) == 0 || norm(cross(d0, d1)) <= 1e-15 * norm(d0) * norm(d1))
      throw InputError("needle_curve: three consecutive chain vertices are collinear");
    leg.from = sign * normalized(d0);
    leg.to = sign * normalized(d1);
    out.legs.push_back(leg);
    for (std::size_t q = 0; q < samples_per_leg; ++q)
      out.samples.push_back(needle_direction(chain, leg, static_cast<double>(q) / static_cast<double>(samples_per_leg)));
  }
  out.samples.push_back(out.samples.front());
  out.closed = angle_between(out.samples.front(), needle_direction(chain, out.legs.back(), 1.0)) <= kNeedleTolerance;
  const std::size_t half = p * samples_per_leg;
  out.antipodal = true;
  for (std::size_t q = 0; q < half; ++q)
    if (norm(out.samples[q] + out.samples[q + half]) > kNeedleTolerance) out.antipodal = false;
  return out;
}

namespace {

bool on_arc(Vec3 from, Vec3 to, Vec3 x, double tol) {
  return angle_between(from, x) + angle_between(x, to) - angle_between(from, to) <= tol;
}

// Closest point of the great-circle arc to d, without the drag parameter.
Vec3 arc_closest(const NeedleLeg& leg, Vec3 d) {
  const Vec3 n = normalized(cross(leg.from, leg.to));
  const Vec3 proj = d - dot(d, n) * n;
  if (norm(proj) > 1e-300) {
    const Vec3 q = normalized(proj);
    if (on_arc(leg.from, leg.to, q, 1e-12)) return q;
  }
  return angle_between(d, leg.from) <= angle_between(d, leg.to) ? leg.from : leg.to;
}

// Bisection on tau: the angle from the leg's first direction grows monotonically.
double refine_tau(const Chain3& chain, const NeedleLeg& leg, Vec3 target) {
  const double goal = angle_between(leg.from, target);
  double lo = 0, hi = 1;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (angle_between(leg.from, needle_direction(chain, leg, mid)) < goal) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CurvePoint closest_on_curve(const Chain3& chain, const DirectionCurve& curve, Vec3 d) {
  CurvePoint best;
  best.angle = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < curve.legs.size(); ++l) {
    const Vec3 q = arc_closest(curve.legs[l], d);
    if (angle_between(q, d) >= best.angle) continue;
    const double tau = refine_tau(chain, curve.legs[l], q);
    const double ang = angle_between(needle_direction(chain, curve.legs[l], tau), d);
    if (ang < best.angle) best = {ang, l, tau};
  }
  return best;
}

NeedleMatch common_needle_direction(const Chain3& c1, const Chain3& c2, std::size_t samples_per_leg) {
  const DirectionCurve A = needle_curve(c1, samples_per_leg), B = needle_curve(c2, samples_per_leg);
  NeedleMatch m;
  auto accept = [&](Vec3 x) {
    CurvePoint p1 = closest_on_curve(c1, A, x), p2 = closest_on_curve(c2, B, x);
    const double err = std::max(p1.angle, p2.angle);
    if (err > kNeedleTolerance) return false;
    m = {true, false, x, p1, p2, err};
    return true;
  };
  for (const auto& la : A.legs)
    for (const auto& lb : B.legs) {
      const Vec3 na = normalized(cross(la.from, la.to)), nb = normalized(cross(lb.from, lb.to));
      const Vec3 axis = cross(na, nb);
      if (norm(axis) < 1e-12) {
        for (Vec3 e : {la.from, la.to})
          if (on_arc(lb.from, lb.to, e, 1e-9) && accept(e)) return m;
        for (Vec3 e : {lb.from, lb.to})
          if (on_arc(la.from, la.to, e, 1e-9) && accept(e)) return m;
        continue;
      }
      const Vec3 x = normalized(axis);
      for (Vec3 cand : {x, -1.0 * x})
        if (on_arc(la.from, la.to, cand, 1e-9) && on_arc(lb.from, lb.to, cand, 1e-9) && accept(cand)) return m;
    }
  // Grid fallback: best direction on a lat/long grid, scored on the arcs.
  const double step = kNeedleGridDegrees * 3.141592653589793 / 180;
  double best = std::numeric_limits<double>::infinity();
  Vec3 best_d;
  for (double lat = -1.5707963267948966; lat <= 1.5707963267948966 + 1e-12; lat += step)
    for (double lon = 0; lon < 6.283185307179586; lon += step) {
      const Vec3 d{std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
      double e1 = std::numeric_limits<double>::infinity(), e2 = e1;
      for (const auto& l : A.legs) e1 = std::min(e1, angle_between(arc_closest(l, d), d));
      for (const auto& l : B.legs) e2 = std::min(e2, angle_between(arc_closest(l, d), d));
      if (std::max(e1, e2) < best) {
        best = std::max(e1, e2);
        best_d = d;
      }
    }
  m.fallback = true;
  m.direction = best_d;
  m.on_first = closest_on_curve(c1, A, best_d);
  m.on_second = closest_on_curve(c2, B, best_d);
  m.error = std::max(m.on_first.angle, m.on_second.angle);
  m.found = m.error <= step;
  return m;
}

}  // namespace geoclique
