#include <gtest/gtest.h>

#include <cmath>

#include "focal/causal.hpp"
#include "focal/errors.hpp"
#include "focal/focal_desitter.hpp"
#include "focal/frenet.hpp"
#include "oracles.hpp"

using namespace focal;
using namespace focal::oracle;

namespace {

double dist_sq(const CurveDef& def, double t, const MVector& v) {
  const MVector d = curve_point(def, t) - v;
  return mdot_ref(d, d);
}

double lightlike_t(const CurveDef& def) {
  for (const auto& p : find_lightlike_points(def))
    if (p.certified) return p.t_star;
  ADD_FAILURE() << "no certified lightlike point";
  return 0.0;
}

}  // namespace

TEST(SphericalFocalCurve, HyperbolaIsAPoint) {
  const Curve curve(load_fixture("s21_hyperbola.curve"));
  for (int i = 0; i < 50; ++i) {
    const double t = -0.98 + 1.96 * i / 49;
    const FocalSample s = spherical_focal_curve(curve, t, 1);
    EXPECT_LE(max_abs_diff(s.point, MVector{0, 0, -1}), 1e-10) << t;
    EXPECT_LE(max_abs_diff(spherical_focal_curve(curve, t, -1).point, MVector{0, 0, 1}), 1e-10);
  }
  const SphericalSingularPoints sp = spherical_singular_points(curve, -0.9, 0.9);
  EXPECT_TRUE(sp.constant_kg);
}

TEST(SphericalFocalCurve, TangentNormClosedForm) {
  // Spacelike arc with |kg| > 1: <a', a'> = -kg'^2 / (kg^2 - 1)^2.
  const CurveDef def = load_fixture("s21_spiral.curve");
  const Curve curve(def);
  for (double t : {-0.7, -0.2, 0.3, 0.8}) {
    const FrameS21 f = frame_s21(curve, t);
    ASSERT_EQ(f.delta, -1);
    ASSERT_GT(std::abs(f.kg), 1.0);
    ASSERT_GT(std::abs(f.dkg), 1e-3);
    const double closed = -f.dkg * f.dkg / std::pow(f.kg * f.kg - 1, 2);
    // Jet differentiation: the chart partial in arc length.
    const FocalSample s = spherical_focal_curve(curve, t, 1);
    EXPECT_NEAR(mdot(s.d_param, s.d_param), closed, 1e-6 * std::abs(closed)) << t;
    // Independent: finite difference of the focal point in t.
    auto alpha = [&](double x) { return spherical_focal_curve(curve, x, 1).point; };
    const MVector da = fd_vec(alpha, t, 1, 1e-3) / f.ds_dt;
    EXPECT_NEAR(mdot_ref(da, da), closed, 1e-6 * std::abs(closed)) << t;
    EXPECT_NEAR(mdot(s.point, s.point), 1.0, 1e-12);
  }
}

TEST(SphericalFocalCurve, DefiningPropertyAndAntipodes) {
  const CurveDef def = load_fixture("s21_example.curve");
  const Curve curve(def);
  for (double t : {-0.25, -0.1, 0.1, 0.25}) {
    const FocalSample p = spherical_focal_curve(curve, t, 1);
    const FocalSample m = spherical_focal_curve(curve, t, -1);
    EXPECT_LE(max_abs_diff(p.point, -m.point), 0.0);
    const auto f = [&](double s) { return dist_sq(def, s, p.point); };
    EXPECT_LE(std::abs(fd(f, t, 1, 1e-3)), 1e-7);
    EXPECT_LE(std::abs(fd(f, t, 2, 1e-3)), 1e-6);
  }
}

TEST(SphericalBifurcation, PassesThroughTheCurve) {
  const CurveDef def = load_fixture("s21_example.curve");
  const double t0 = lightlike_t(def);
  const FocalSample at = spherical_bif_lightlike(def, t0, 1);
  EXPECT_LE(max_abs_diff(at.point, MVector{0, 0, 1}), 1e-10);
  EXPECT_LE(max_abs_diff(at.point, curve_point(def, t0)), 1e-10);
  EXPECT_EQ(at.sing, SingClass::a(2));
  for (int i = 0; i <= 40; ++i) {
    const double t = -0.03 + 0.06 * i / 40;
    const FocalSample s = spherical_bif_lightlike(def, t, 1);
    EXPECT_LE(std::abs(mdot(s.point, s.point) - 1.0), 1e-10);
    const auto f = [&](double x) { return dist_sq(def, x, s.point); };
    EXPECT_LE(std::abs(fd(f, t, 1, 1e-3)), 1e-7) << t;
    EXPECT_LE(max_abs_diff(spherical_bif_lightlike(def, t, -1).point, -s.point), 0.0);
  }
}

TEST(SphericalFocalSurface, TimelikeCircleClosedForm) {
  const Curve curve(load_fixture("s31_circle.curve"));
  for (double t : {-0.8, 0.0, 0.5}) {
    const MuBound b = spherical_mu_bound(curve, t);
    EXPECT_TRUE(b.inside);
    EXPECT_NEAR(b.bound, 1 / std::sqrt(2.0), 1e-12);
    for (double mu : {-0.7, -0.3, 0.0, 0.4, 0.7}) {
      const double root = std::sqrt(1 - 2 * mu * mu);
      const FocalSample p = spherical_focal_surface(curve, t, mu, 1);
      const FocalSample m = spherical_focal_surface(curve, t, mu, -1);
      // Branch +1 carries +root along the binormal (0,0,0,-1).
      EXPECT_LE(max_abs_diff(p.point, MVector{0, 0, std::sqrt(2.0) * mu, -root}), 1e-9);
      EXPECT_LE(max_abs_diff(m.point, MVector{0, 0, std::sqrt(2.0) * mu, root}), 1e-9);
      EXPECT_LE(std::abs(mdot(p.point, p.point) - 1.0), 1e-9);
    }
    EXPECT_THROW(spherical_focal_surface(curve, t, 0.75, 1), DomainError);
  }
}

TEST(SphericalFocalSurface, BranchMirror) {
  const Curve curve(load_fixture("s31_lightlike.curve"));
  for (double t : {-0.25, -0.05, 0.1}) {
    for (double mu : {-0.6, 0.2, 0.5}) {
      FocalSample p;
      try {
        p = spherical_focal_surface(curve, t, mu, 1);
      } catch (const DomainError&) {
        continue;
      }
      const FocalSample m = spherical_focal_surface(curve, t, -mu, -1);
      EXPECT_LE(max_abs_diff(p.point, -m.point), 1e-12);
    }
  }
}

TEST(SphericalFocalSurface, DefiningPropertyAndSignature) {
  const CurveDef def = load_fixture("s31_lightlike.curve");
  const Curve curve(def);
  struct Case {
    double t;
    MetricClass expected;
  };
  for (const Case c : {Case{-0.25, MetricClass::Riemannian}, Case{0.05, MetricClass::Lorentzian}}) {
    for (double mu : {-0.3, 0.15, 0.9}) {
      for (int b : {1, -1}) {
        FocalSample s;
        try {
          s = spherical_focal_surface(curve, c.t, mu, b);
        } catch (const DomainError&) {
          continue;
        }
        const auto f = [&](double x) { return dist_sq(def, x, s.point); };
        const double scale = std::max(1.0, euclidean_norm_sq(curve_point(def, c.t) - s.point));
        EXPECT_LE(std::abs(fd(f, c.t, 1, 1e-3)) / scale, 1e-7);
        EXPECT_EQ(s.metric.cls, c.expected) << c.t << ' ' << mu << ' ' << b;
      }
    }
  }
}

TEST(SphericalCuspidal, ThirdDerivativeVanishes) {
  const CurveDef def = load_fixture("s31_lightlike.curve");
  const Curve curve(def);
  for (double t : {-0.25, 0.05}) {
    for (int b : {1, -1}) {
      const FocalSample c = spherical_cuspidal(curve, t, b);
      EXPECT_TRUE(c.sing.is_at_least(3));
      // Brute force over the focal line for the same branch.
      double best_mu = 0.0, best = INFINITY;
      for (int i = 0; i <= 2000; ++i) {
        const double mu = -0.999 + 1.998 * i / 2000;
        FocalSample s;
        try {
          s = spherical_focal_surface(curve, t, mu, b);
        } catch (const DomainError&) {
          continue;
        }
        const double f3 = std::abs(fd([&](double x) { return dist_sq(def, x, s.point); }, t, 3, 1e-2));
        if (f3 < best) {
          best = f3;
          best_mu = mu;
        }
      }
      EXPECT_NEAR(c.mu, best_mu, 2e-3) << t << ' ' << b;
    }
  }
}

TEST(BetaLambda, AtTheLightlikePoint) {
  const CurveDef def = load_fixture("s31_lightlike.curve");
  const double t0 = lightlike_t(def);
  EXPECT_GT(t0, -0.2);
  EXPECT_LT(t0, -0.125);
  for (double mu : {1.0, -1.0}) {
    const BetaLambdaResult r = beta_lambda(def, t0, mu, 1);
    EXPECT_LE(std::abs(r.report.r_value), 1e-8 * r.report.r_scale);
  }
  const BetaLambdaResult one = beta_lambda(def, t0, 1.0, 1);
  EXPECT_LE(std::abs(one.report.beta), 1e-9);
  EXPECT_LE(std::abs(one.report.lambda), 1e-9);
  EXPECT_LE(max_abs_diff(one.sample.point, curve_point(def, t0)), 1e-8);
  const BetaLambdaResult mid = beta_lambda(def, t0, 0.0, 1);
  EXPECT_LT(mid.report.a_coef, 0.0);
  EXPECT_GT(mid.report.b_coef, 0.0);
}

TEST(BetaLambda, BackSubstitution) {
  const CurveDef def = load_fixture("s31_lightlike.curve");
  for (double t : {-0.14, -0.127, -0.11}) {
    for (double mu : {-0.8, -0.2, 0.5}) {
      for (int b : {1, -1}) {
        BetaLambdaResult r;
        try {
          r = beta_lambda(def, t, mu, b);
        } catch (const DomainError&) {
          continue;
        }
        const MVector d1 = fd_vec(point_fn(def), t, 1, 1e-3);
        const MVector& v = r.sample.point;
        EXPECT_NEAR(mdot_ref(v, v), 1.0, 1e-10);
        EXPECT_NEAR(mdot_ref(v, d1), 0.0, 1e-9);
        const auto f = [&](double x) { return dist_sq(def, x, v); };
        EXPECT_LE(std::abs(fd(f, t, 1, 1e-3)), 1e-7);
        EXPECT_LE(std::abs(fd(f, t, 2, 1e-3)), 1e-6);
      }
    }
  }
}

TEST(S31Ld, InteriorSamplesAreDegenerate) {
  const CurveDef def = load_fixture("s31_lightlike.curve");
  const double t0 = lightlike_t(def);
  for (int b : {1, -1}) {
    const LdExtraction ld = s31_ld_extract(def, t0, 99, b);
    ASSERT_FALSE(ld.empty());
    EXPECT_EQ(ld.non_degenerate, 0);
    for (const auto& s : ld.samples) {
      EXPECT_GT(s.mu, -0.99);
      EXPECT_LT(s.mu, 0.99);
      EXPECT_EQ(s.metric.cls, MetricClass::Degenerate);
      EXPECT_NEAR(mdot(s.point, s.point), 1.0, 1e-9);
    }
  }
}
