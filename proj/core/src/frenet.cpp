#include "focal/frenet.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "focal/errors.hpp"

namespace focal {

namespace {

void require_ambient(const Curve& curve, Ambient a) {
  if (curve.ambient() != a)
    throw UsageError("this frame needs a curve in " + std::string(to_string(a)) + ", got " +
                     std::string(to_string(curve.ambient())));
}

int sign_or_throw(double q, double scale, double tol, const std::string& what, double t) {
  if (is_zero(q, scale, tol))
    throw DegenerateError(what + " vanishes at t = " + std::to_string(t));
  return q > 0 ? 1 : -1;
}

double speed_at(const Curve& curve, double t) { return mnorm(curve.series(t, 1).derivative(1)); }

}  // namespace

FrameSeriesR31 frame_series_r31(const Curve& curve, double t, int order, double tol) {
  require_ambient(curve, Ambient::R31);
  if (order < 2) throw UsageError("frame series needs order >= 2");
  FrameSeriesR31 f;
  f.point = arclength_series(curve, t, order);
  f.tangent = derivative(f.point);
  const SeriesVec accel = derivative(f.tangent);
  f.eps = sign_or_throw(mdot(f.tangent, f.tangent).value(), 1.0, tol, "<t, t>", t);
  Series kk = mdot(accel, accel);
  const double kk0 = kk.value();
  if (euclidean_norm_sq(accel.value()) <= tol * tol)
    throw DegenerateError("curvature vanishes at t = " + std::to_string(t));
  f.delta = sign_or_throw(kk0, euclidean_norm_sq(accel.value()), tol, "<n, n> (lightlike principal normal)", t);
  if (f.delta < 0) kk = -kk;
  f.k = sqrt(kk);
  f.normal = accel / f.k;
  f.binormal = wedge3(f.tangent, f.normal);
  f.ds_dt = speed_at(curve, t);
  return f;
}

FrameR31 frame_r31(const Curve& curve, double t, double tol) {
  const FrameSeriesR31 s = frame_series_r31(curve, t, 3, tol);
  FrameR31 f;
  f.param = t;
  f.ds_dt = s.ds_dt;
  f.point = s.point.value();
  f.tangent = s.tangent.value();
  f.normal = s.normal.value();
  f.binormal = s.binormal.value();
  f.k = s.k.value();
  f.dk = s.k.derivative(1);
  f.eps = s.eps;
  f.delta = s.delta;
  const MVector db = derivative(s.binormal).value();
  f.tau = f.delta * mdot(db, f.normal);

  const Domain dom = curve.domain();
  const double h = 1e-5 * std::max(1e-3, dom.width());
  f.tau_fd = std::numeric_limits<double>::quiet_NaN();
  if (t - 2 * h >= dom.lo && t + 2 * h <= dom.hi) {
    try {
      auto b = [&](double s) { return frame_series_r31(curve, s, 2, tol).binormal.value(); };
      const MVector db_fd = (b(t - 2 * h) - 8.0 * b(t - h) + 8.0 * b(t + h) - b(t + 2 * h)) / (12.0 * h * f.ds_dt);
      f.tau_fd = f.delta * mdot(db_fd, f.normal);
      f.torsion_mismatch = std::abs(f.tau_fd - f.tau) > 1e-6 * std::max(1.0, std::abs(f.tau));
    } catch (const NumericError&) {
      // stencil crosses a singular point; leave tau_fd unset
    }
  }
  return f;
}

FrameSeriesS21 frame_series_s21(const Curve& curve, double t, int order, double tol) {
  require_ambient(curve, Ambient::S21);
  if (order < 2) throw UsageError("frame series needs order >= 2");
  FrameSeriesS21 f;
  f.point = arclength_series(curve, t, order);
  f.tangent = derivative(f.point);
  const SeriesVec accel = derivative(f.tangent);
  f.eps = sign_or_throw(mdot(f.tangent, f.tangent).value(), 1.0, tol, "<t, t>", t);
  f.normal = wedge3(f.point, f.tangent);
  f.delta = sign_or_throw(mdot(f.normal, f.normal).value(), 1.0, tol, "<n, n>", t);
  f.kg = mdot(accel, f.normal);
  f.ds_dt = speed_at(curve, t);
  return f;
}

FrameS21 frame_s21(const Curve& curve, double t, double tol) {
  const FrameSeriesS21 s = frame_series_s21(curve, t, 3, tol);
  FrameS21 f;
  f.param = t;
  f.ds_dt = s.ds_dt;
  f.point = s.point.value();
  f.tangent = s.tangent.value();
  f.normal = s.normal.value();
  f.kg = s.kg.value();
  f.dkg = s.kg.derivative(1);
  f.eps = s.eps;
  f.delta = s.delta;
  return f;
}

FrameSeriesS31 frame_series_s31(const Curve& curve, double t, int order, double tol) {
  require_ambient(curve, Ambient::S31);
  if (order < 3) throw UsageError("S31 frame series needs order >= 3");
  FrameSeriesS31 f;
  f.point = arclength_series(curve, t, order);
  f.tangent = derivative(f.point);
  const SeriesVec accel = derivative(f.tangent);
  const int eps = sign_or_throw(mdot(f.tangent, f.tangent).value(), 1.0, tol, "<t, t>", t);
  f.kind = eps > 0 ? S31Kind::SpacelikeCurve : S31Kind::TimelikeCurve;
  const SeriesVec v = eps > 0 ? accel + f.point : accel - f.point;
  const MVector v0 = v.value();
  Series q = mdot(v, v);
  if (euclidean_norm_sq(v0) <= tol * tol || is_zero(q.value(), euclidean_norm_sq(v0), tol))
    throw DegenerateError(std::string(eps > 0 ? "geodesic" : "hyperbolic") +
                          " curvature vanishes at t = " + std::to_string(t));
  f.delta = q.value() > 0 ? 1 : -1;
  if (f.delta < 0) q = -q;
  f.curvature = sqrt(q);
  f.normal = v / f.curvature;
  f.binormal = wedge4(f.point, f.tangent, f.normal);
  const double det = det4(f.point.derivative(0), f.point.derivative(1), f.point.derivative(2),
                          f.point.derivative(3));
  const double c0 = f.curvature.value();
  f.torsion = eps > 0 ? f.delta * det / (c0 * c0) : -det / (c0 * c0);
  f.ds_dt = speed_at(curve, t);
  return f;
}

FrameS31 frame_s31(const Curve& curve, double t, double tol) {
  const FrameSeriesS31 s = frame_series_s31(curve, t, 3, tol);
  FrameS31 f;
  f.param = t;
  f.ds_dt = s.ds_dt;
  f.kind = s.kind;
  f.point = s.point.value();
  f.tangent = s.tangent.value();
  f.normal = s.normal.value();
  f.binormal = s.binormal.value();
  f.curvature = s.curvature.value();
  f.dcurvature = s.curvature.derivative(1);
  f.torsion = s.torsion;
  f.delta = s.delta;
  return f;
}

}  // namespace focal
