#include "focal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "focal/causal.hpp"
#include "focal/errors.hpp"
#include "focal/focal_desitter.hpp"
#include "focal/focal_r31.hpp"
#include "focal/frenet.hpp"
#include "focal/singularity.hpp"

namespace focal {

namespace {

constexpr double kDefiningTol = 1e-7;
// Beyond this Euclidean radius the de Sitter focal surface hugs the light
// cone and its relative Gram determinant falls below any working tolerance.
constexpr double kFarField = 1e2;

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : r_(r) {}

  void check(std::string name, double residual, double tol) {
    const bool ok = std::isfinite(residual) && residual <= tol;
    r_.assertions.push_back({std::move(name), residual, tol, ok});
  }
  void count(std::string name, int failures) { check(std::move(name), failures, 0.0); }

 private:
  VerifyReport& r_;
};

std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

double defining_residual(const CurveDef& def, double t, const MVector& v) {
  const DistanceJet j = dist_jet(def, t, v);
  return std::max(std::abs(j.f[1]), std::abs(j.f[2])) / j.scale;
}

std::vector<LightlikePoint> certified_points(const CurveDef& def, double tol) {
  ScanOptions opt;
  opt.tol = tol;
  std::vector<LightlikePoint> out;
  for (const auto& p : find_lightlike_points(def, opt))
    if (p.certified) out.push_back(p);
  return out;
}

// Interior sample parameters of each non-lightlike arc.
struct ArcSamples {
  CausalArc arc;
  std::vector<double> ts;
};

std::vector<ArcSamples> arc_samples(const CurveDef& def, int n, double tol) {
  ScanOptions opt;
  opt.tol = tol;
  const auto pts = find_lightlike_points(def, opt);
  std::vector<ArcSamples> out;
  for (const auto& arc : split_arcs(def, pts, tol)) {
    ArcSamples a{arc, {}};
    const double w = arc.hi - arc.lo;
    for (int i = 0; i < n; ++i) a.ts.push_back(arc.lo + w * (0.05 + 0.9 * (i + 0.5) / n));
    out.push_back(std::move(a));
  }
  return out;
}

double axis(double lo, double hi, int j, int m) { return m == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * j / (m - 1); }

void suite_lightlike_points(const Curve& curve, const VerifyOptions& opt, Recorder& rec) {
  const CurveDef& def = curve.def();
  ScanOptions scan;
  scan.tol = opt.tol;
  const auto pts = find_lightlike_points(def, scan);
  ScanOptions fine = scan;
  fine.grid *= 2;
  const auto pts_fine = find_lightlike_points(def, fine);
  rec.count("lightlike_count_stable_under_refinement",
            static_cast<int>(pts.size() > pts_fine.size() ? pts.size() - pts_fine.size()
                                                          : pts_fine.size() - pts.size()));
  int uncertified = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const MVector d = curve_series(def, pts[i].t_star, 1).derivative(1);
    rec.check(idx("lightlike", i) + ".speed_sq", std::abs(mdot(d, d)) / std::max(1.0, mdot_scale(d, d)),
              1e-9);
    if (!pts[i].certified) ++uncertified;
  }
  rec.count("lightlike_points_in_omega", uncertified);
  const auto arcs = split_arcs(def, pts, opt.tol);
  int same = 0;
  for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
    const bool certified_cut = pts.size() > i && pts[i].certified;
    if (certified_cut && arcs[i].kind == arcs[i + 1].kind) ++same;
  }
  rec.count("causal_type_alternates", same);
}

void suite_focal_signature(const Curve& curve, const VerifyOptions& opt, Recorder& rec) {
  if (curve.ambient() != Ambient::R31) throw UsageError("suite thm3_4 needs an R31 curve");
  const CurveDef& def = curve.def();
  int mismatches = 0;
  int skipped = 0;
  int cusp_defined = 0;
  int cusp_failures = 0;
  double worst_def = 0.0;
  std::size_t ai = 0;
  for (const auto& a : arc_samples(def, opt.grid_n, opt.tol)) {
    const MetricClass expected =
        a.arc.kind == CausalType::Timelike ? MetricClass::Riemannian : MetricClass::Lorentzian;
    for (double t : a.ts) {
      std::optional<double> mu_c;
      try {
        const CuspidalSample c = cuspidal_curve(curve, t, opt.tol);
        mu_c = c.mu;
        ++cusp_defined;
        const FocalSample at = focal_surface(curve, t, c.mu, opt.tol);
        if (at.metric.cls != MetricClass::Undefined) ++cusp_failures;
      } catch (const DegenerateError&) {
      } catch (const ConditioningError&) {
        ++skipped;
        continue;
      }
      for (int j = 0; j < opt.grid_m; ++j) {
        const double mu = axis(opt.mu_lo, opt.mu_hi, j, opt.grid_m);
        if (mu_c && std::abs(mu - *mu_c) <= 1e-3 * std::max(1.0, std::abs(*mu_c))) continue;
        FocalSample s;
        try {
          s = focal_surface(curve, t, mu, opt.tol);
        } catch (const NumericError&) {
          ++skipped;
          continue;
        }
        if (s.metric.cls != expected) ++mismatches;
        worst_def = std::max(worst_def, defining_residual(def, t, s.point));
      }
    }
    rec.count(idx("arc", ai) + ".signature_mismatches", mismatches);
    mismatches = 0;
    ++ai;
  }
  rec.check("focal_surface.defining_property", worst_def, kDefiningTol);
  rec.count("cuspidal_curve.tangent_plane_undefined", cusp_failures);
  (void)cusp_defined;
  (void)skipped;
}

void suite_cuspidal_point(const Curve& curve, const VerifyOptions& opt, Recorder& rec) {
  if (curve.ambient() != Ambient::R31) throw UsageError("suite prop4_1 needs an R31 curve");
  const CurveDef& def = curve.def();
  const auto pts = certified_points(def, opt.tol);
  rec.count("has_certified_lightlike_point", pts.empty() ? 1 : 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double t0 = pts[i].t_star;
    const double m0 = mu0(def, t0, opt.tol);
    rec.count(idx("lightlike", i) + ".mu0_nonzero", m0 == 0.0 ? 1 : 0);
    const FocalSample at = bif_lightlike_chart(def, t0, m0, opt.tol);
    rec.count(idx("lightlike", i) + ".A_ge3_at_mu0", at.sing.is_at_least(3) ? 0 : 1);
    int not_a2 = 0;
    for (double mu : {m0 - 1.0, m0 - 0.5, m0 + 0.5, m0 + 1.0, 0.5 * m0}) {
      const FocalSample s = bif_lightlike_chart(def, t0, mu, opt.tol);
      if (!(s.sing == SingClass::a(2))) ++not_a2;
    }
    rec.count(idx("lightlike", i) + ".A2_away_from_mu0", not_a2);
  }
}

void suite_degenerate_point(const Curve& curve, const VerifyOptions& opt, Recorder& rec) {
  if (curve.ambient() != Ambient::R31) throw UsageError("suite thm4_3 needs an R31 curve");
  const CurveDef& def = curve.def();
  const auto pts = certified_points(def, opt.tol);
  rec.count("has_certified_lightlike_point", pts.empty() ? 1 : 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string p = idx("lightlike", i);
    const double t0 = pts[i].t_star;
    const FocalSample s = bif_lightlike_chart(def, t0, 0.0, opt.tol);
    const MVector g0 = curve_point(def, t0);
    rec.check(p + ".point_is_curve_point", euclidean_norm(s.point - g0), 1e-12);
    rec.count(p + ".rank2", s.metric.full_rank ? 0 : 1);
    rec.check(p + ".gram_det", std::abs(s.metric.gram.det()) / s.metric.scale, 1e-9);
    const MVector d1 = curve_series(def, t0, 1).derivative(1);
    double cross = 1.0;
    if (s.metric.lightlike_direction) {
      const MVector& dir = *s.metric.lightlike_direction;
      cross = std::sqrt(euclidean_wedge_sq(dir, d1)) / (euclidean_norm(dir) * euclidean_norm(d1));
    }
    rec.check(p + ".lightlike_direction_parallel_to_tangent", cross, 1e-8);
    const LdExtraction ld = ld_extract(def, t0, opt.ld_mu_lo, opt.ld_mu_hi, 91, opt.tol);
    rec.count(p + ".ld_nonempty", ld.empty() ? 1 : 0);
    rec.count(p + ".ld_non_degenerate", ld.non_degenerate);
    rec.check(p + ".ld_line_residual", ld.line_residual.value_or(INFINITY), 1e-9);
  }
}

void suite_de_sitter_plane(const Curve& curve, const VerifyOptions& opt, Recorder& rec) {
  if (curve.ambient() != Ambient::S21) throw UsageError("suite s21 needs an S21 curve");
  const CurveDef& def = curve.def();
  rec.check("on_sphere", validate_on_sphere(def).worst_residual, 1e-9);
  double norm_res = 0.0, def_res = 0.0, anti = 0.0, closed = 0.0, height = 0.0;
  int sig = 0;
  for (const auto& a : arc_samples(def, std::max(opt.grid_n, 10), opt.tol)) {
    for (double t : a.ts) {
      FocalSample p, m;
      FrameS21 fr;
      try {
        p = spherical_focal_curve(curve, t, 1, opt.tol);
        m = spherical_focal_curve(curve, t, -1, opt.tol);
        fr = frame_s21(curve, t, opt.tol);
      } catch (const NumericError&) {
        continue;
      }
      norm_res = std::max(norm_res, std::abs(mdot(p.point, p.point) - 1.0));
      def_res = std::max(def_res, defining_residual(def, t, p.point));
      anti = std::max(anti, euclidean_norm(m.point + p.point));
      height = std::max(height, height_agreement(def, t, p.point));
      const double q = fr.kg * fr.kg + fr.delta;
      const double expect = fr.dkg * fr.dkg * (1.0 + fr.delta * fr.kg * fr.kg) / (q * q * q);
      const double got = mdot(p.d_param, p.d_param);
      closed = std::max(closed, std::abs(got - expect) / std::max(1e-300, std::max(std::abs(expect), 1e-12)));
      if (!is_zero(fr.dkg, std::abs(fr.kg), 1e-6)) {
        const CausalType want = a.arc.kind == CausalType::Spacelike ? CausalType::Timelike : CausalType::Spacelike;
        if (causal_type(p.d_param, 1e-12) != want) ++sig;
      }
    }
  }
  rec.check("focal_curve.unit_norm", norm_res, 1e-9);
  rec.check("focal_curve.defining_property", def_res, kDefiningTol);
  rec.check("focal_curve.antipodal_branches", anti, 0.0);
  rec.check("focal_curve.tangent_norm_closed_form", closed, 1e-6);
  rec.count("focal_curve.tangent_causal_type", sig);
  rec.check("height_function_agreement", height, 1e-10);
  const auto pts = certified_points(def, opt.tol);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string pre = idx("lightlike", i);
    const double t0 = pts[i].t_star;
    const FocalSample at = spherical_bif_lightlike(def, t0, 1, opt.tol);
    rec.check(pre + ".focal_point_is_curve_point", euclidean_norm(at.point - curve_point(def, t0)), 1e-10);
    double wn = 0.0, wd = 0.0;
    const double half = 0.05 * def.domain.width();
    for (int k = 0; k <= 50; ++k) {
      const double t = std::clamp(t0 - half + 2.0 * half * k / 50, def.domain.lo, def.domain.hi);
      try {
        const FocalSample s = spherical_bif_lightlike(def, t, 1, opt.tol);
        wn = std::max(wn, std::abs(mdot(s.point, s.point) - 1.0));
        wd = std::max(wd, defining_residual(def, t, s.point));
      } catch (const NumericError&) {
        wn = INFINITY;
      }
    }
    rec.check(pre + ".window_unit_norm", wn, 1e-10);
    rec.check(pre + ".window_defining_property", wd, kDefiningTol);
  }
}

void suite_de_sitter_space(const Curve& curve, const VerifyOptions& opt, Recorder& rec) {
  if (curve.ambient() != Ambient::S31) throw UsageError("suite s31 needs an S31 curve");
  const CurveDef& def = curve.def();
  rec.check("on_sphere", validate_on_sphere(def).worst_residual, 1e-9);
  double norm_res = 0.0, def_res = 0.0, mirror = 0.0;
  int sig = 0;
  for (const auto& a : arc_samples(def, opt.grid_n, opt.tol)) {
    for (double t : a.ts) {
      std::optional<double> mu_c;
      MuBound bound;
      MetricClass expected;
      try {
        bound = spherical_mu_bound(curve, t, opt.tol);
        expected = frame_s31(curve, t, opt.tol).kind == S31Kind::SpacelikeCurve ? MetricClass::Lorentzian
                                                                               : MetricClass::Riemannian;
      } catch (const NumericError&) {
        continue;
      }
      std::vector<double> cusp;
      for (int b : {1, -1}) {
        try {
          cusp.push_back(spherical_cuspidal(curve, t, b, opt.tol).mu);
        } catch (const NumericError&) {
        }
      }
      for (int j = 0; j < opt.grid_m; ++j) {
        const double mu = axis(opt.mu_lo, opt.mu_hi, j, opt.grid_m);
        for (int b : {1, -1}) {
          FocalSample s;
          try {
            s = spherical_focal_surface(curve, t, mu, b, opt.tol);
          } catch (const DomainError&) {
            continue;
          }
          norm_res = std::max(norm_res, std::abs(mdot(s.point, s.point) - 1.0));
          def_res = std::max(def_res, defining_residual(def, t, s.point));
          const FocalSample other = spherical_focal_surface(curve, t, -mu, -b, opt.tol);
          mirror = std::max(mirror, euclidean_norm(s.point + other.point));
          const bool near_cusp = std::any_of(cusp.begin(), cusp.end(), [&](double c) {
            return std::abs(mu - c) <= 1e-3 * std::max(1.0, std::abs(c));
          });
          const bool near_rim = std::isfinite(bound.bound) &&
                                std::abs(std::abs(mu) - bound.bound) <= 1e-6 * std::max(1.0, bound.bound);
          // Rank-deficient samples are singular points of the surface (the whole
          // surface collapses to a curve when curvature is constant); no signature there.
          const bool singular = s.metric.cls == MetricClass::Undefined;
          const bool far = euclidean_norm(s.point) > kFarField;
          if (!near_cusp && !near_rim && !far && !singular && !s.boundary && s.metric.cls != expected) ++sig;
        }
      }
    }
  }
  rec.check("focal_surface.unit_norm", norm_res, 1e-9);
  rec.check("focal_surface.defining_property", def_res, kDefiningTol);
  rec.check("focal_surface.branch_mirror", mirror, 1e-12);
  rec.count("focal_surface.signature_mismatches", sig);
  const auto pts = certified_points(def, opt.tol);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string pre = idx("lightlike", i);
    const double t0 = pts[i].t_star;
    for (double mu : {1.0, -1.0}) {
      const BetaLambdaResult r = beta_lambda(def, t0, mu, 1, opt.tol);
      const std::string m = mu > 0 ? "(mu=1)" : "(mu=-1)";
      rec.check(pre + ".R" + m, std::abs(r.report.r_value) / r.report.r_scale, 1e-8);
      if (mu > 0) {
        rec.check(pre + ".beta(mu=1)", std::abs(r.report.beta), 1e-9);
        rec.check(pre + ".lambda(mu=1)", std::abs(r.report.lambda), 1e-9);
        rec.check(pre + ".point(mu=1)_is_curve_point", euclidean_norm(r.sample.point - curve_point(def, t0)), 1e-8);
      }
    }
    const BetaLambdaResult mid = beta_lambda(def, t0, 0.0, 1, opt.tol);
    rec.count(pre + ".A_negative_B_positive", mid.report.a_coef < 0 && mid.report.b_coef > 0 ? 0 : 1);
    const LdExtraction ld = s31_ld_extract(def, t0, 99, 1, opt.tol);
    rec.count(pre + ".ld_non_degenerate", ld.non_degenerate);
    double wn = 0.0;
    for (const auto& s : ld.samples) wn = std::max(wn, std::abs(mdot(s.point, s.point) - 1.0));
    rec.check(pre + ".ld_unit_norm", wn, 1e-9);
  }
}

using SuiteFn = std::function<void(const Curve&, const VerifyOptions&, Recorder&)>;

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  bool (*applies)(Ambient);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r = {
      {"prop2_1", suite_lightlike_points, [](Ambient) { return true; }},
      {"thm3_4", suite_focal_signature, [](Ambient a) { return a == Ambient::R31; }},
      {"prop4_1", suite_cuspidal_point, [](Ambient a) { return a == Ambient::R31; }},
      {"thm4_3", suite_degenerate_point, [](Ambient a) { return a == Ambient::R31; }},
      {"s21", suite_de_sitter_plane, [](Ambient a) { return a == Ambient::S21; }},
      {"s31", suite_de_sitter_space, [](Ambient a) { return a == Ambient::S31; }},
  };
  return r;
}

}  // namespace

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const Assertion* VerifyReport::first_failure() const {
  for (const auto& a : assertions)
    if (!a.pass) return &a;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : registry()) n.emplace_back(e.name);
    n.emplace_back("all");
    return n;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

VerifyReport run_suite(std::string_view suite, const Curve& curve, std::string curve_label,
                       const VerifyOptions& opt) {
  if (!is_suite(suite)) throw UsageError("unknown suite '" + std::string(suite) + "'");
  VerifyReport report;
  report.suite = std::string(suite);
  report.curve = std::move(curve_label);
  Recorder rec(report);
  for (const auto& e : registry()) {
    if (suite == "all") {
      if (!e.applies(curve.ambient())) continue;
      // The lightlike-point suites have nothing to check on a curve without one.
      const std::string_view n = e.name;
      if ((n == "prop4_1" || n == "thm4_3") && certified_points(curve.def(), opt.tol).empty()) continue;
    } else if (suite != e.name) {
      continue;
    }
    const std::size_t before = report.assertions.size();
    e.fn(curve, opt, rec);
    if (suite == "all")
      for (std::size_t i = before; i < report.assertions.size(); ++i)
        report.assertions[i].name = std::string(e.name) + "." + report.assertions[i].name;
  }
  return report;
}

}  // namespace focal
