#include "focal/focal_desitter.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "focal/errors.hpp"
#include "focal/frenet.hpp"

namespace focal {

namespace {

void check_branch(int branch) {
  if (branch != 1 && branch != -1) throw UsageError("branch must be +1 or -1");
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

double kg_rate(const Curve& curve, double t, double tol) {
  return frame_series_s21(curve, t, 3, tol).kg.derivative(1);
}

}  // namespace

FocalSample spherical_focal_curve(const Curve& curve, double t, int branch, double tol) {
  check_branch(branch);
  const FrameSeriesS21 f = frame_series_s21(curve, t, 3, tol);
  const Series q = f.kg * f.kg + static_cast<double>(f.delta);
  const double kg = f.kg.value();
  if (q.value() <= tol * std::max(1.0, kg * kg))
    throw DomainError("spherical focal curve undefined at t = " + num(t) + ": kg^2 + delta = " +
                      num(q.value()));
  const SeriesVec a = (branch / sqrt(q)) * (f.kg * f.point + static_cast<double>(f.eps) * f.normal);
  FocalSample s;
  s.chart = Chart::Frenet;
  s.param = t;
  s.branch = branch;
  s.point = a.value();
  s.d_param = a.coeff(1);
  s.d_mu = MVector::zero(3);
  s.sing = classify(curve.def(), t, s.point, tol);
  return s;
}

SphericalSingularPoints spherical_singular_points(const Curve& curve, double lo, double hi, int grid,
                                                  double tol) {
  if (!(lo < hi)) throw UsageError("interval must satisfy lo < hi");
  if (grid < 2) throw UsageError("grid needs at least two points");
  std::vector<double> ts;
  std::vector<double> rates;
  double peak_rate = 0.0;
  double peak_kg = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = i == grid - 1 ? hi : lo + (hi - lo) * i / (grid - 1);
    try {
      const FrameSeriesS21 f = frame_series_s21(curve, t, 3, tol);
      ts.push_back(t);
      rates.push_back(f.kg.derivative(1));
      peak_rate = std::max(peak_rate, std::abs(rates.back()));
      peak_kg = std::max(peak_kg, std::abs(f.kg.value()));
    } catch (const NumericError&) {
      // guard band or singular sample: gap in the scan
    }
  }
  SphericalSingularPoints out;
  if (ts.empty()) return out;
  if (peak_rate <= tol * std::max(1.0, peak_kg)) {
    out.constant_kg = true;
    return out;
  }
  const double width_tol = 1e-13 * (hi - lo);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    double a = ts[i];
    double b = ts[i + 1];
    double fa = rates[i];
    const double fb = rates[i + 1];
    if (fa == 0.0) {
      if (out.params.empty() || out.params.back() != a) out.params.push_back(a);
      continue;
    }
    if (fb == 0.0 || (fa > 0) == (fb > 0)) continue;
    while (b - a > width_tol) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const double fm = kg_rate(curve, m, tol);
      if (fm == 0.0) {
        a = b = m;
        break;
      }
      if ((fm > 0) == (fa > 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    out.params.push_back(0.5 * (a + b));
  }
  if (!ts.empty() && rates.back() == 0.0 &&
      (out.params.empty() || out.params.back() != ts.back()))
    out.params.push_back(ts.back());
  return out;
}

FocalSample spherical_bif_lightlike(const CurveDef& def, double t, int branch, double tol) {
  check_branch(branch);
  if (def.ambient != Ambient::S21) throw UsageError("spherical lightlike chart needs an S21 curve");
  const SeriesVec g = curve_series(def, t, 3);
  const SeriesVec d1 = derivative(g);
  const SeriesVec d2 = derivative(d1);
  const Series sigma = mdot(d1, d1);
  const SeriesVec gw = wedge3(g, d1);
  const Series w = mdot(gw, d2);
  const Series rad = w * w - sigma * sigma * sigma;
  const double w0 = w.value();
  if (is_zero(w0, mdot_scale(gw.value(), d2.value()), tol))
    throw DegenerateError("<g ^ g', g''> vanishes at t = " + num(t));
  if (rad.value() <= tol * std::max(1.0, w0 * w0))
    throw DomainError("spherical lightlike chart undefined at t = " + num(t) +
                      ": w^2 - <g',g'>^3 = " + num(rad.value()));
  const Series m = sigma / sqrt(rad);
  const Series root = 1.0 + m * m * sigma;
  if (root.value() <= 0.0)
    throw DomainError("spherical lightlike chart undefined at t = " + num(t) +
                      ": 1 + m^2 <g',g'> = " + num(root.value()));
  const double side = w0 > 0 ? 1.0 : -1.0;
  const SeriesVec a = static_cast<double>(branch) * (sqrt(root) * g + (side * m) * gw);
  FocalSample s;
  s.chart = Chart::Lightlike;
  s.param = t;
  s.mu = m.value();
  s.branch = branch;
  s.point = a.value();
  s.d_param = a.coeff(1);
  s.d_mu = MVector::zero(3);
  s.sing = classify(def, t, s.point, tol);
  return s;
}

MuBound spherical_mu_bound(const Curve& curve, double t, double tol) {
  const FrameSeriesS31 f = frame_series_s31(curve, t, 3, tol);
  const double k = f.curvature.value();
  MuBound b;
  if (f.kind == S31Kind::TimelikeCurve) {
    b.bound = k / std::sqrt(k * k + 1.0);
  } else if (f.delta > 0) {
    b.inside = false;
    b.bound = k / std::sqrt(k * k + 1.0);
  } else if (k * k > 1.0) {
    b.bound = k / std::sqrt(k * k - 1.0);
  } else {
    b.bound = std::numeric_limits<double>::infinity();
  }
  return b;
}

FocalSample spherical_focal_surface(const Curve& curve, double t, double mu, int branch, double tol) {
  check_branch(branch);
  const FrameSeriesS31 f = frame_series_s31(curve, t, 3, tol);
  const Series& k = f.curvature;
  const double k0 = k.value();
  const bool spacelike = f.kind == S31Kind::SpacelikeCurve;
  const double dl = f.delta;
  Series rad;
  SeriesVec base;
  if (spacelike) {
    rad = -dl * (k * k) + (dl * mu * mu) * (k * k + dl);
    base = mu * f.point + (mu / dl) * ((1.0 / k) * f.normal);
  } else {
    rad = k * k - (mu * mu) * (k * k + 1.0);
    base = mu * f.point - mu * ((1.0 / k) * f.normal);
  }
  const double rscale = std::max(1.0, k0 * k0 * (1.0 + mu * mu));
  const double r0 = rad.value();
  if (r0 < -tol * rscale) {
    const MuBound b = spherical_mu_bound(curve, t, tol);
    throw DomainError("spherical focal surface undefined at t = " + num(t) + ", mu = " + num(mu) +
                      ": need |mu| " + (b.inside ? "<= " : ">= ") + num(b.bound));
  }
  FocalSample s;
  s.chart = Chart::Frenet;
  s.param = t;
  s.mu = mu;
  s.branch = branch;
  const MVector e0 = f.binormal.value();
  const MVector g0 = f.point.value();
  const MVector n0 = f.normal.value();
  if (std::abs(r0) <= tol * rscale) {
    // Rim of the chart: the square-root term vanishes and its derivative blows up.
    s.boundary = true;
    s.point = base.value();
    s.d_param = base.coeff(1);
    s.d_mu = MVector::zero(4);
    s.metric = tangent_metric(s.d_param, s.d_mu, tol);
  } else {
    const Series root = sqrt(rad);
    const SeriesVec p = base + (static_cast<double>(branch) * root / k) * f.binormal;
    s.point = p.value();
    s.d_param = p.coeff(1);
    const double sq = root.value();
    if (spacelike)
      s.d_mu = g0 + (1.0 / (dl * k0)) * n0 + (branch * dl * (k0 * k0 + dl) * mu / (sq * k0)) * e0;
    else
      s.d_mu = g0 - (1.0 / k0) * n0 - (branch * (k0 * k0 + 1.0) * mu / (sq * k0)) * e0;
    s.metric = tangent_metric(s.d_param, s.d_mu, tol);
  }
  s.sing = classify(curve.def(), t, s.point, tol);
  return s;
}

FocalSample spherical_cuspidal(const Curve& curve, double t, int branch, double tol) {
  check_branch(branch);
  const FrameSeriesS31 f = frame_series_s31(curve, t, 3, tol);
  const double k = f.curvature.value();
  const double dk = f.curvature.derivative(1);
  const double tau = f.torsion;
  const double dl = f.delta;
  const double lead = tau * tau * k * k * k * k;
  const double den = f.kind == S31Kind::SpacelikeCurve
                         ? lead + dl * tau * tau * k * k - dl * dk * dk
                         : lead + dk * dk + tau * tau * k * k;
  const double scale = std::max(1.0, lead + tau * tau * k * k + dk * dk);
  if (den <= tol * scale)
    throw DegenerateError("spherical cuspidal curve undefined at t = " + num(t) +
                          ": radicand " + num(den));
  const double m = std::sqrt(lead / den);
  // The sign of mu pairs with the branch through the orientation of e; keep
  // the candidate with the smaller third derivative of the distance function.
  std::optional<FocalSample> best;
  double best_residual = 0.0;
  for (double cand : {m, -m}) {
    FocalSample s;
    try {
      s = spherical_focal_surface(curve, t, cand, branch, tol);
    } catch (const DomainError&) {
      continue;
    }
    const DistanceJet j = dist_jet(curve.def(), t, s.point);
    const double r = std::abs(j.f[3]) / j.scale;
    if (!best || r < best_residual) {
      best = s;
      best_residual = r;
    }
    if (m == 0.0) break;
  }
  if (!best)
    throw DomainError("spherical cuspidal point outside the focal surface domain at t = " + num(t));
  return *best;
}

namespace {

struct BetaLambdaInputs {
  SeriesVec g, n, e;
  Series sigma, gn, ge, nn, ee;
};

struct BetaLambdaParts {
  SeriesVec v;
  Series beta, lambda, r, a, b;
  bool rim = false;
};

BetaLambdaParts assemble(const BetaLambdaInputs& in, const Series& mu, int branch, double tol,
                         double t) {
  BetaLambdaParts out;
  const Series ge2 = in.ge * in.ge;
  const Series gn2 = in.gn * in.gn;
  out.a = -(gn2 * in.ee * ge2) - in.nn * ge2 * ge2 - in.nn * ge2 * in.sigma * in.sigma * in.ee;
  out.b = ge2 * gn2 * in.ee + in.nn * ge2 * ge2;
  out.r = out.a * mu * mu + out.b;
  const double mu0 = mu.value();
  const double rscale = std::max(1.0, std::abs(out.a.value()) * mu0 * mu0 + std::abs(out.b.value()));
  const double r0 = out.r.value();
  if (r0 < -tol * rscale)
    throw DomainError("beta/lambda chart undefined at t = " + num(t) + ", mu = " + num(mu0) +
                      ": R = " + num(r0));
  Series root;
  if (r0 <= tol * rscale) {
    out.rim = true;
    root = Series(mu.order(), 0.0);
  } else {
    root = sqrt(out.r);
  }
  const Series den = in.nn * ge2 + in.ee * gn2;
  if (is_zero(den.value(), std::abs(in.nn.value()) * ge2.value() + std::abs(in.ee.value()) * gn2.value(), tol))
    throw DegenerateError("beta/lambda chart degenerate at t = " + num(t));
  out.beta = (mu * in.sigma * in.gn * in.ee + static_cast<double>(branch) * root) / den;
  out.lambda = (mu * in.sigma - out.beta * in.gn) / in.ge;
  out.v = mu * in.g + out.beta * in.n + out.lambda * in.e;
  return out;
}

Series frozen(const Series& s, int order) { return Series(order, s.value()); }

SeriesVec frozen(const SeriesVec& v, int order) { return SeriesVec::constant(v.value(), order); }

}  // namespace

BetaLambdaResult beta_lambda(const CurveDef& def, double t, double mu, int branch, double tol) {
  check_branch(branch);
  if (def.ambient != Ambient::S31) throw UsageError("the beta/lambda chart needs an S31 curve");
  const SeriesVec g = curve_series(def, t, 3);
  const SeriesVec d1 = derivative(g);
  const SeriesVec d2 = derivative(d1);
  const MVector g0 = g.value();
  const MVector d10 = d1.value();
  const MVector d20 = d2.value();

  // Complete gamma, gamma' to the normal space with the coordinate axis that
  // best conditions <g'', E>.
  int best = -1;
  double best_score = 0.0;
  double best_norm = 1.0;
  for (int i = 0; i < 4; ++i) {
    const MVector cand = wedge4(g0, d10, MVector::basis(4, i));
    const double len = euclidean_norm(cand);
    if (len == 0.0) continue;
    const MVector unit = cand / len;
    const double score = std::abs(mdot(d20, wedge4(g0, d10, unit)));
    if (best < 0 || score > best_score) {
      best = i;
      best_score = score;
      best_norm = len;
    }
  }
  if (best < 0 || is_zero(best_score, euclidean_norm(d20) * euclidean_norm(d10), tol))
    throw DegenerateError("no axis completes a usable normal frame at t = " + num(t));

  BetaLambdaInputs in;
  in.g = g;
  in.n = (1.0 / best_norm) * wedge4(g, d1, SeriesVec::constant(MVector::basis(4, best), 2));
  in.e = wedge4(g, d1, in.n);
  in.sigma = mdot(d1, d1);
  in.gn = mdot(d2, in.n);
  in.ge = mdot(d2, in.e);
  in.nn = mdot(in.n, in.n);
  in.ee = mdot(in.e, in.e);

  const BetaLambdaParts along_t = assemble(in, Series(1, mu), branch, tol, t);

  BetaLambdaInputs fixed;
  fixed.g = frozen(in.g, 1);
  fixed.n = frozen(in.n, 1);
  fixed.e = frozen(in.e, 1);
  fixed.sigma = frozen(in.sigma, 1);
  fixed.gn = frozen(in.gn, 1);
  fixed.ge = frozen(in.ge, 1);
  fixed.nn = frozen(in.nn, 1);
  fixed.ee = frozen(in.ee, 1);

  BetaLambdaResult res;
  BetaLambdaReport& rep = res.report;
  rep.beta = along_t.beta.value();
  rep.lambda = along_t.lambda.value();
  rep.r_value = along_t.r.value();
  rep.a_coef = along_t.a.value();
  rep.b_coef = along_t.b.value();
  rep.r_scale = std::max(1.0, std::abs(rep.a_coef) * mu * mu + std::abs(rep.b_coef));
  rep.inner_sign = in.ge.value() >= 0 ? 1 : -1;
  rep.basis_index = best;
  rep.n_vec = in.n.value();
  rep.e_vec = in.e.value();

  FocalSample& s = res.sample;
  s.chart = Chart::Lightlike;
  s.param = t;
  s.mu = mu;
  s.branch = branch;
  s.point = along_t.v.value();
  s.boundary = along_t.rim;
  if (along_t.rim) {
    s.d_param = along_t.v.coeff(1);
    s.d_mu = MVector::zero(4);
  } else {
    const BetaLambdaParts along_mu = assemble(fixed, Series::variable(1, mu), branch, tol, t);
    s.d_param = along_t.v.coeff(1);
    s.d_mu = along_mu.v.coeff(1);
  }
  s.metric = tangent_metric(s.d_param, s.d_mu, tol);
  s.sing = classify(def, t, s.point, tol);
  return res;
}

LdExtraction s31_ld_extract(const CurveDef& def, double t0, int resolution, int branch, double tol) {
  if (resolution < 1) throw UsageError("LD extraction needs at least one sample");
  LdExtraction out;
  const double h = 2.0 / (resolution + 1);
  for (int i = 1; i <= resolution; ++i) {
    const double mu = -1.0 + h * i;
    FocalSample s = beta_lambda(def, t0, mu, branch, tol).sample;
    if (s.metric.cls != MetricClass::Degenerate) ++out.non_degenerate;
    out.samples.push_back(std::move(s));
  }
  return out;
}

}  // namespace focal
