#include "focal/focal_r31.hpp"

#include <cmath>
#include <string>

#include "focal/errors.hpp"
#include "focal/fit.hpp"
#include "focal/frenet.hpp"

namespace focal {

std::string_view to_string(Chart c) { return c == Chart::Frenet ? "frenet" : "lightlike"; }

FocalSample focal_surface(const Curve& curve, double t, double mu, double tol) {
  const FrameSeriesR31 f = frame_series_r31(curve, t, 3, tol);
  const Series radius = (static_cast<double>(f.eps * f.delta)) / f.k;
  const SeriesVec b = f.point + radius * f.normal + mu * f.binormal;
  FocalSample s;
  s.chart = Chart::Frenet;
  s.param = t;
  s.mu = mu;
  s.point = b.value();
  s.d_param = b.coeff(1);
  s.d_mu = f.binormal.value();
  s.metric = tangent_metric(s.d_param, s.d_mu, tol);
  s.sing = classify(curve.def(), t, s.point, tol);
  return s;
}

CuspidalSample cuspidal_curve(const Curve& curve, double t, double tol) {
  const FrameSeriesR31 f = frame_series_r31(curve, t, 3, tol);
  const double k = f.k.value();
  const double dk = f.k.derivative(1);
  const double tau = f.delta * mdot(derivative(f.binormal).value(), f.normal.value());
  if (is_zero(tau, k, tol))
    throw DegenerateError("cuspidal curve undefined: torsion vanishes at t = " + std::to_string(t));
  CuspidalSample c;
  c.param = t;
  c.mu = dk / (f.eps * f.delta * k * k * tau);
  c.point = f.point.value() + (f.eps * f.delta / k) * f.normal.value() + c.mu * f.binormal.value();
  c.sing = classify(curve.def(), t, c.point, tol);
  return c;
}

FocalSample bif_lightlike_chart(const CurveDef& def, double t, double mu, double tol) {
  if (def.ambient != Ambient::R31) throw UsageError("the lightlike chart needs an R31 curve");
  const SeriesVec g = curve_series(def, t, 3);
  const SeriesVec d1 = derivative(g);
  const SeriesVec d2 = derivative(d1);
  const SeriesVec n = wedge3(d1, d2);
  const SeriesVec b = wedge3(d1, n);
  const Series nn = mdot(n, n);
  if (is_zero(nn.value(), euclidean_norm_sq(n.value()), tol))
    throw DegenerateError("lightlike chart undefined: <N, N> vanishes at t = " + std::to_string(t));
  const Series lambda = mdot(d1, d1) / nn;
  const SeriesVec p = g - mu * n - lambda * b;
  FocalSample s;
  s.chart = Chart::Lightlike;
  s.param = t;
  s.mu = mu;
  s.point = p.value();
  s.d_param = p.coeff(1);
  s.d_mu = -n.value();
  s.metric = tangent_metric(s.d_param, s.d_mu, tol);
  s.sing = classify(def, t, s.point, tol);
  return s;
}

double mu0(const CurveDef& def, double t0, double tol) {
  if (def.ambient != Ambient::R31) throw UsageError("mu0 needs an R31 curve");
  const auto d = curve_derivatives(def, t0, 3);
  const MVector n = wedge3(d[1], d[2]);
  const double den = mdot(n, d[3]);
  if (is_zero(den, mdot_scale(n, d[3]), tol))
    throw DegenerateError("mu0 undefined: <g' ^ g'', g'''> vanishes at t = " + std::to_string(t0));
  return -3.0 * mdot(d[1], d[2]) / den;
}

LdExtraction ld_extract(const CurveDef& def, double t0, double mu_lo, double mu_hi, int resolution,
                        double tol) {
  if (resolution < 2) throw UsageError("LD extraction needs at least two samples");
  if (!(mu_lo < mu_hi)) throw UsageError("mu range must satisfy lo < hi");
  LdExtraction out;
  try {
    out.mu0 = mu0(def, t0, tol);
  } catch (const DegenerateError&) {
    // no finite exceptional value on this line
  }
  std::vector<MVector> pts;
  for (int i = 0; i < resolution; ++i) {
    const double mu = mu_lo + (mu_hi - mu_lo) * i / (resolution - 1);
    if (out.mu0 && std::abs(mu - *out.mu0) <= 1e-3 * std::abs(*out.mu0)) {
      ++out.excluded;
      continue;
    }
    FocalSample s = bif_lightlike_chart(def, t0, mu, tol);
    if (s.metric.cls != MetricClass::Degenerate) ++out.non_degenerate;
    pts.push_back(s.point);
    out.samples.push_back(std::move(s));
  }
  if (!pts.empty()) out.line_residual = line_fit_residual(pts);
  return out;
}

}  // namespace focal
