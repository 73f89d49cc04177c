#include "focal/causal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "focal/errors.hpp"

namespace focal {

namespace {

struct SpeedSample {
  double value;
  double scale;
};

SpeedSample speed_sample(const CurveDef& def, double t) {
  const MVector d = curve_series(def, t, 1).derivative(1);
  return {mdot(d, d), mdot_scale(d, d)};
}

std::optional<SpeedSample> try_speed(const CurveDef& def, double t) {
  try {
    return speed_sample(def, t);
  } catch (const NumericError&) {
    return std::nullopt;
  }
}

int sign_of(const SpeedSample& s, double tol) {
  if (is_zero(s.value, s.scale, tol)) return 0;
  return s.value > 0 ? 1 : -1;
}

LightlikePoint describe(const CurveDef& def, double t, bool transverse, double tol) {
  const SeriesVec g = curve_series(def, t, 2);
  const MVector d1 = g.derivative(1);
  const MVector d2 = g.derivative(2);
  LightlikePoint p;
  p.t_star = t;
  p.omega_value = mdot(d2, d1);
  p.speed_derivative = 2.0 * p.omega_value;
  p.certified = transverse && !is_zero(p.omega_value, mdot_scale(d2, d1), tol);
  return p;
}

double bisect(const CurveDef& def, double lo, double hi, double width_tol) {
  double flo = speed_sample(def, lo).value;
  while (hi - lo > width_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = speed_sample(def, mid).value;
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section minimisation of |speed_sq| on [lo, hi].
double minimise_abs_speed(const CurveDef& def, double lo, double hi, double width_tol) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  auto f = [&](double t) { return std::abs(speed_sample(def, t).value); };
  double a = lo;
  double b = hi;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > width_tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double speed_sq(const CurveDef& def, double t) { return speed_sample(def, t).value; }

double speed(const CurveDef& def, double t) { return std::sqrt(std::abs(speed_sq(def, t))); }

std::vector<LightlikePoint> find_lightlike_points(const CurveDef& def, const ScanOptions& opt) {
  if (opt.grid < 2) throw UsageError("scan grid needs at least two points");
  if (!(opt.tol >= 0.0)) throw UsageError("tolerance must be non-negative");
  const Domain dom = def.domain;
  const int n = opt.grid;
  const double width_tol = opt.refine_fraction * dom.width();

  std::vector<double> ts(static_cast<std::size_t>(n));
  std::vector<std::optional<SpeedSample>> fs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ts[i] = i == n - 1 ? dom.hi : dom.lo + dom.width() * i / (n - 1);
    fs[i] = try_speed(def, ts[i]);
  }

  std::vector<LightlikePoint> found;
  for (int i = 0; i + 1 < n; ++i) {
    if (!fs[i] || !fs[i + 1]) continue;
    const double a = fs[i]->value;
    const double b = fs[i + 1]->value;
    if (a == 0.0 || b == 0.0) continue;
    if ((a > 0) != (b > 0)) found.push_back(describe(def, bisect(def, ts[i], ts[i + 1], width_tol), true, opt.tol));
  }
  for (int i = 0; i < n; ++i) {
    if (!fs[i]) continue;
    if (fs[i]->value == 0.0) {
      const bool interior = i > 0 && i + 1 < n && fs[i - 1] && fs[i + 1];
      const bool crosses = interior && fs[i - 1]->value * fs[i + 1]->value < 0.0;
      found.push_back(describe(def, ts[i], crosses, opt.tol));
      continue;
    }
    // A double root can sit between grid points, so every local minimum of
    // |speed_sq| that no bracketed root explains is refined and then judged.
    const double here = std::abs(fs[i]->value);
    const bool left_ok = i == 0 || !fs[i - 1] || std::abs(fs[i - 1]->value) >= here;
    const bool right_ok = i + 1 == n || !fs[i + 1] || std::abs(fs[i + 1]->value) > here;
    if (!left_ok || !right_ok) continue;
    const bool bracketed = (i > 0 && fs[i - 1] && fs[i - 1]->value * fs[i]->value < 0) ||
                           (i + 1 < n && fs[i + 1] && fs[i + 1]->value * fs[i]->value < 0);
    if (bracketed) continue;
    const double lo = ts[static_cast<std::size_t>(std::max(i - 1, 0))];
    const double hi = ts[static_cast<std::size_t>(std::min(i + 1, n - 1))];
    const double t = minimise_abs_speed(def, lo, hi, width_tol);
    const SpeedSample s = speed_sample(def, t);
    if (sign_of(s, opt.tol) == 0) found.push_back(describe(def, t, false, opt.tol));
  }

  std::sort(found.begin(), found.end(),
            [](const LightlikePoint& x, const LightlikePoint& y) { return x.t_star < y.t_star; });
  std::vector<LightlikePoint> out;
  for (const auto& p : found) {
    if (!out.empty() && p.t_star - out.back().t_star <= 10.0 * width_tol) {
      out.back().certified = out.back().certified || p.certified;
      continue;
    }
    out.push_back(p);
  }
  return out;
}

OmegaCheck omega_check(const CurveDef& def, double t0, double tol) {
  const SeriesVec g = curve_series(def, t0, 2);
  const MVector d1 = g.derivative(1);
  const MVector d2 = g.derivative(2);
  OmegaCheck r;
  r.value = mdot(d2, d1);
  r.in_omega = !is_zero(r.value, mdot_scale(d2, d1), tol);
  return r;
}

std::vector<CausalArc> split_arcs(const CurveDef& def, const std::vector<LightlikePoint>& points,
                                  double tol) {
  std::vector<double> cuts{def.domain.lo};
  for (const auto& p : points) {
    if (p.t_star < cuts.back()) throw UsageError("lightlike points must be sorted");
    if (p.t_star > def.domain.lo && p.t_star < def.domain.hi) cuts.push_back(p.t_star);
  }
  cuts.push_back(def.domain.hi);
  std::vector<CausalArc> arcs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const MVector d = curve_series(def, mid, 1).derivative(1);
    const CausalType kind = causal_type(d, tol);
    if (kind == CausalType::Lightlike)
      throw DegenerateError("arc (" + std::to_string(cuts[i]) + ", " + std::to_string(cuts[i + 1]) +
                            ") is lightlike at its midpoint; refine the lightlike scan");
    arcs.push_back({cuts[i], cuts[i + 1], kind});
  }
  return arcs;
}

SeriesVec arclength_series(const Curve& curve, double t, int order) {
  if (order < 0 || order > kMaxJetOrder)
    throw UsageError("arc-length order must lie in [0, " + std::to_string(kMaxJetOrder) + "]");
  const SeriesVec g = curve.series(t, std::max(order, 1));
  const MVector d1 = g.derivative(1);
  const double sp = mnorm(d1);
  if (sp < curve.guard_threshold() || sp == 0.0)
    throw ConditioningError("arc length undefined near lightlike point: |g'(" + std::to_string(t) +
                            ")| = " + std::to_string(sp) + " is below the guard threshold " +
                            std::to_string(curve.guard_threshold()));
  if (order == 0) {
    SeriesVec r(g.dim(), 0);
    for (int i = 0; i < g.dim(); ++i) r[i] = Series(0, g[i].value());
    return r;
  }
  const SeriesVec dg = derivative(g);
  Series sigma = mdot(dg, dg);
  if (sigma.value() < 0) sigma = -sigma;
  const Series rate = sqrt(sigma);
  // s(t + h) - s(t) as a series in h, then inverted.
  Series phi(order, 0.0);
  for (int k = 1; k <= order; ++k) phi[k] = rate[k - 1] / k;
  return compose(g, revert(phi));
}

std::vector<Jet> arclength_jet(const Curve& curve, double t, int order) {
  if (order > 5) throw UsageError("arc-length jets are limited to order 5");
  const SeriesVec s = arclength_series(curve, t, order);
  std::vector<Jet> jets;
  for (int i = 0; i < s.dim(); ++i) {
    Jet j;
    j.order = order;
    for (int k = 0; k <= order; ++k) j.d.push_back(s[i].derivative(k));
    jets.push_back(std::move(j));
  }
  return jets;
}

}  // namespace focal
