#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "focal/curve.hpp"

namespace focal {

struct Assertion {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::string curve;
  std::vector<Assertion> assertions;

  bool passed() const;
  /// First failing assertion, or nullptr.
  const Assertion* first_failure() const;
};

struct VerifyOptions {
  double tol = kDefaultTol;
  int grid_n = 20;
  int grid_m = 20;
  double mu_lo = -2.0;
  double mu_hi = 2.0;
  double ld_mu_lo = -0.45;
  double ld_mu_hi = 0.45;
};

/// prop2_1, thm3_4, prop4_1, thm4_3, s21, s31, all.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs one named suite; "all" runs every suite that applies to the curve's
/// ambient space, skipping the lightlike-point suites when there is no
/// certified lightlike point. Throws UsageError for unknown suites and for suites that
/// need a different ambient space.
VerifyReport run_suite(std::string_view suite, const Curve& curve, std::string curve_label,
                       const VerifyOptions& opt = {});

}  // namespace focal
