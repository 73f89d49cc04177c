#pragma once

#include <vector>

#include "focal/curve.hpp"

namespace focal {

/// A parameter where the tangent is lightlike.
struct LightlikePoint {
  double t_star = 0.0;
  double speed_derivative = 0.0;  // d/dt <g', g'> at t_star
  double omega_value = 0.0;       // <g'', g'> at t_star
  bool certified = false;         // transverse zero with omega_value != 0
};

struct CausalArc {
  double lo = 0.0;
  double hi = 0.0;
  CausalType kind = CausalType::Spacelike;
};

struct ScanOptions {
  int grid = 4096;
  double tol = kDefaultTol;
  /// Bisection stops once the bracket is below this fraction of the domain width.
  double refine_fraction = 1e-13;
};

/// <g'(t), g'(t)>.
double speed_sq(const CurveDef& def, double t);

/// Sign changes of speed_sq on a uniform grid, refined by bisection, plus
/// near-zero grid minima without a sign change (reported uncertified).
std::vector<LightlikePoint> find_lightlike_points(const CurveDef& def, const ScanOptions& opt = {});

struct OmegaCheck {
  double value = 0.0;
  bool in_omega = false;
};

OmegaCheck omega_check(const CurveDef& def, double t0, double tol = kDefaultTol);

/// Open arcs between consecutive lightlike points, tagged by the causal type
/// at their midpoints. Throws DegenerateError when a midpoint is itself lightlike.
std::vector<CausalArc> split_arcs(const CurveDef& def, const std::vector<LightlikePoint>& points,
                                  double tol = kDefaultTol);

/// gamma reparametrised by arc length about t: the returned series is in the
/// arc-length increment u, so coefficient k times k! is d^k gamma / ds^k.
/// Throws ConditioningError inside the guard band.
SeriesVec arclength_series(const Curve& curve, double t, int order);

/// Per-component plain derivatives in arc length, order <= 5.
std::vector<Jet> arclength_jet(const Curve& curve, double t, int order);

/// ds/dt = |g'(t)|.
double speed(const CurveDef& def, double t);

}  // namespace focal
