#include "focal/tangent_metric.hpp"

#include <cmath>

#include "focal/errors.hpp"

namespace focal {

namespace {

// Chart partials whose angle has sine below this multiple of tol count as parallel.
constexpr double kRankFactor = 1e3;

}  // namespace

std::string_view to_string(MetricClass c) {
  switch (c) {
    case MetricClass::Riemannian: return "Riemannian";
    case MetricClass::Lorentzian: return "Lorentzian";
    case MetricClass::Degenerate: return "Degenerate";
    case MetricClass::Undefined: return "Undefined";
  }
  return "?";
}

MVector normalise_max_component(const MVector& v) {
  int best = 0;
  for (int i = 1; i < v.dim(); ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  if (v[best] == 0.0) throw DegenerateError("cannot normalise the zero vector");
  return v / v[best];
}

TangentMetric tangent_metric(const MVector& p1, const MVector& p2, double tol) {
  require_same_dim(p1, p2);
  TangentMetric m;
  m.gram = {mdot(p1, p1), mdot(p1, p2), mdot(p2, p2)};
  const double n1 = euclidean_norm_sq(p1);
  const double n2 = euclidean_norm_sq(p2);
  m.scale = std::max(1.0, n1 * n2);
  const double sine = n1 > 0 && n2 > 0 ? std::sqrt(euclidean_wedge_sq(p1, p2) / (n1 * n2)) : 0.0;
  // A partial that is rounding noise next to the other one has no usable direction.
  const double tiny = kRankFactor * tol * kRankFactor * tol;
  const bool vanishing = n1 <= tiny * std::max(1.0, n2) || n2 <= tiny * std::max(1.0, n1);
  m.full_rank = !vanishing && sine > kRankFactor * tol;
  if (!m.full_rank) {
    m.cls = MetricClass::Undefined;
    return m;
  }
  const double det = m.gram.det();
  if (is_zero(det, n1 * n2, tol)) {
    m.cls = MetricClass::Degenerate;
    // Kernel of the 2x2 form from its larger row.
    const Gram& g = m.gram;
    double a, b;
    if (std::hypot(g.g11, g.g12) >= std::hypot(g.g12, g.g22)) {
      a = -g.g12;
      b = g.g11;
    } else {
      a = g.g22;
      b = -g.g12;
    }
    if (a == 0.0 && b == 0.0) a = 1.0;  // zero form: every direction is null
    m.lightlike_direction = normalise_max_component(a * p1 + b * p2);
    return m;
  }
  // A 2-plane of R^n_1 carries at most one negative direction, so det > 0
  // means positive definite.
  m.cls = det < 0 ? MetricClass::Lorentzian : MetricClass::Riemannian;
  return m;
}

}  // namespace focal
