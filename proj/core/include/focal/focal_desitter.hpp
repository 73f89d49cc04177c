#pragma once

#include <vector>

#include "focal/curve.hpp"
#include "focal/focal_r31.hpp"
#include "focal/sample.hpp"

namespace focal {

/// Spherical focal curve of a curve on S^2_1:
/// branch * (kg gamma + eps n) / sqrt(kg^2 + delta). d_param is the arc-length derivative.
FocalSample spherical_focal_curve(const Curve& curve, double t, int branch, double tol = kDefaultTol);

struct SphericalSingularPoints {
  std::vector<double> params;  // roots of d kg / ds
  bool constant_kg = false;    // kg' vanishes on the whole interval
};

SphericalSingularPoints spherical_singular_points(const Curve& curve, double lo, double hi,
                                                  int grid = 1024, double tol = kDefaultTol);

/// Branch of the spherical bifurcation curve through a lightlike point:
/// sqrt(1 + m^2 <g',g'>) g + sign(w) m (g ^ g') with m = <g',g'> / sqrt(w^2 - <g',g'>^3)
/// and w = <g ^ g', g''>. The minus branch is the antipode.
FocalSample spherical_bif_lightlike(const CurveDef& def, double t, int branch, double tol = kDefaultTol);

/// Spherical focal surface of a curve on S^3_1 in the Frenet chart.
/// Throws DomainError when mu lies outside the real domain of the square root.
FocalSample spherical_focal_surface(const Curve& curve, double t, double mu, int branch,
                                    double tol = kDefaultTol);

/// Admissible mu-interval description for the S^3_1 focal surface at t.
struct MuBound {
  bool inside = true;   // true: |mu| <= bound is admissible; false: |mu| >= bound
  double bound = 0.0;   // +inf when every mu is admissible
};

MuBound spherical_mu_bound(const Curve& curve, double t, double tol = kDefaultTol);

/// Cuspidal curve on the S^3_1 focal surface (geodesic pair for spacelike
/// curves, hyperbolic pair for timelike ones).
FocalSample spherical_cuspidal(const Curve& curve, double t, int branch, double tol = kDefaultTol);

struct BetaLambdaReport {
  double beta = 0.0;
  double lambda = 0.0;
  double r_value = 0.0;
  double r_scale = 1.0;
  double a_coef = 0.0;
  double b_coef = 0.0;
  int inner_sign = 1;  // sign of <g'', g ^ g' ^ N>
  int basis_index = 0; // coordinate axis used to complete N
  MVector n_vec, e_vec;
};

struct BetaLambdaResult {
  BetaLambdaReport report;
  FocalSample sample;
};

/// Lightlike-neighbourhood chart of the S^3_1 focal surface:
/// v = mu g + beta N + lambda E on the unit pseudo-sphere with <g'', v> = 0.
BetaLambdaResult beta_lambda(const CurveDef& def, double t, double mu, int branch,
                             double tol = kDefaultTol);

/// LD curve of the S^3_1 surface at a lightlike t0: mu over (-1 + h, 1 - h).
LdExtraction s31_ld_extract(const CurveDef& def, double t0, int resolution, int branch = 1,
                            double tol = kDefaultTol);

}  // namespace focal
