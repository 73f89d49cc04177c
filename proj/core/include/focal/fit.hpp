#pragma once

#include <vector>

#include "focal/mvector.hpp"

namespace focal {

/// Largest Euclidean distance from the points to their least-squares line.
/// Zero for fewer than three points.
double line_fit_residual(const std::vector<MVector>& points);

}  // namespace focal
