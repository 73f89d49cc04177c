#pragma once

#include <optional>
#include <vector>

#include "focal/curve.hpp"
#include "focal/sample.hpp"

namespace focal {

/// Focal surface gamma + (eps / (delta k)) n + mu b at native parameter t.
FocalSample focal_surface(const Curve& curve, double t, double mu, double tol = kDefaultTol);

struct CuspidalSample {
  MVector point;
  double param = 0.0;
  double mu = 0.0;
  SingClass sing;
};

/// Point of the focal surface where the distance function gains an A_ge(3)
/// singularity, mu = k' / (eps delta k^2 tau). Throws DegenerateError when tau vanishes.
CuspidalSample cuspidal_curve(const Curve& curve, double t, double tol = kDefaultTol);

/// Bifurcation chart valid through lightlike points:
/// gamma - mu N - (<g',g'> / <N,N>) B with N = g' ^ g'', B = g' ^ N.
FocalSample bif_lightlike_chart(const CurveDef& def, double t, double mu, double tol = kDefaultTol);

/// -3 <g', g''> / <g' ^ g'', g'''> at a lightlike point.
double mu0(const CurveDef& def, double t0, double tol = kDefaultTol);

struct LdExtraction {
  std::vector<FocalSample> samples;
  std::optional<double> mu0;
  int excluded = 0;        // grid values dropped inside the exclusion ball
  int non_degenerate = 0;  // samples whose metric class is not Degenerate
  std::optional<double> line_residual;
  bool empty() const { return samples.empty(); }
};

/// Samples the lightlike-chart line at t0 over [mu_lo, mu_hi] minus a ball
/// of radius 1e-3 |mu0| around mu0.
LdExtraction ld_extract(const CurveDef& def, double t0, double mu_lo, double mu_hi, int resolution,
                        double tol = kDefaultTol);

}  // namespace focal
