#include <algorithm>
#include <cmath>

#include "geoclique/mis.hpp"

namespace geoclique {

namespace {

// Ceiling/floor that ignore floating noise just past an integer.
long long ceil_tol(double v) {
  const double f = std::floor(v);
  if (v - f <= 1e-9 * std::max(1.0, std::abs(v))) return static_cast<long long>(f);
  return static_cast<long long>(f) + 1;
}

long long floor_tol(double v) {
  const double c = std::ceil(v);
  if (c - v <= 1e-9 * std::max(1.0, std::abs(v))) return static_cast<long long>(c);
  return static_cast<long long>(std::floor(v));
}

long long clamp_ll(double v) { return v >= 9e18 ? 9'000'000'000'000'000'000LL : ceil_tol(v); }

long long theory_trials(double beta, long long s, long long t_max) {
  const double p = std::pow(beta / 2, static_cast<double>(s));
  if (p >= 1) return 1;
  if (p == 0) return t_max;
  const double t = std::log(1e-10) / std::log1p(-p);
  if (!(t < static_cast<double>(t_max))) return t_max;
  return std::max(1LL, ceil_tol(t));
}

}  // namespace

long long EptasParams::sample_size(std::size_t n) const {
  if (s_override) return *s_override;
  if (mode == ParamMode::kTheory) return s;
  const long long half = static_cast<long long>(std::floor(beta * static_cast<double>(n) / 2));
  return std::max(0LL, std::min({s, half, 8LL}));
}

long long EptasParams::trials() const { return t; }

EptasParams derive_params(double eps, double beta, int d, int i, ParamMode mode, std::optional<long long> s_override,
                          std::optional<long long> t_override, long long t_max) {
  if (!(eps > 0 && eps < 1)) throw InputError("eps must lie in (0, 1)");
  if (!(beta > 0 && beta <= 1)) throw InputError("beta must lie in (0, 1]");
  if (d < 0) throw InputError("d must be nonnegative");
  if (i < 1) throw InputError("i must be positive");
  if (s_override && *s_override < 0) throw InputError("sample size override must be nonnegative");
  if (t_override && *t_override < 1) throw InputError("trial override must be positive");
  if (t_max < 1) throw InputError("t_max must be positive");
  EptasParams p;
  p.eps = eps;
  p.beta = beta;
  p.d = d;
  p.i = i;
  p.mode = mode;
  p.s_override = s_override;
  p.t_override = t_override;
  const double x = 1 / (beta * eps);
  p.c = ceil_tol(8 * (x * x + x + 1));
  p.delta = eps / static_cast<double>(p.c);
  const double log_term = std::log(1 / p.delta) / p.delta;
  p.z = ceil_tol(4 * x) + 2;
  p.layer_budget = ceil_tol(2 * x);
  p.block_max = floor_tol(2 * x);
  if (mode == ParamMode::kTheory) {
    p.s = s_override ? *s_override : clamp_ll(10.0 * d * log_term);
    p.t = t_override ? *t_override : theory_trials(beta, p.s, t_max);
  } else {
    p.s = s_override ? *s_override : clamp_ll(2.0 * d * log_term);
    p.t = t_override ? *t_override : 50;
  }
  if (mode == ParamMode::kDeterministic && s_override && *s_override > kDeterministicMaxS)
    throw InputError("deterministic mode supports sample sizes up to 3");
  return p;
}

PathCounts& PathCounts::operator+=(const PathCounts& o) {
  bipartite += o.bipartite;
  short_cycle += o.short_cycle;
  long_cycle += o.long_cycle;
  skipped += o.skipped;
  brute_force += o.brute_force;
  return *this;
}

}  // namespace geoclique
