#pragma once

#include <string_view>

#include "focal/singularity.hpp"
#include "focal/tangent_metric.hpp"

namespace focal {

/// Which parametrisation produced a sample: the arc-length (Frenet) chart
/// away from lightlike points, or the lightlike-neighbourhood chart.
enum class Chart { Frenet, Lightlike };

std::string_view to_string(Chart c);

/// One point of a focal or bifurcation parametrisation.
struct FocalSample {
  MVector point;
  Chart chart = Chart::Frenet;
  double param = 0.0;  // native curve parameter t
  double mu = 0.0;
  int branch = 0;      // +1 / -1 on de Sitter branches, 0 in R^3_1
  /// Chart partials. In the Frenet chart d_param is taken in arc length.
  MVector d_param;
  MVector d_mu;
  TangentMetric metric;
  SingClass sing;
  /// Sample sits on the rim of its chart domain (zero radicand).
  bool boundary = false;
};

}  // namespace focal
