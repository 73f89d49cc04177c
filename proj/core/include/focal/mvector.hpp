#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string_view>

namespace focal {

/// Relative zero tolerance used when the caller does not supply one.
inline constexpr double kDefaultTol = 1e-10;

/// True when |q| <= tol * max(1, scale).
inline bool is_zero(double q, double scale, double tol) {
  return std::abs(q) <= tol * std::max(1.0, scale);
}

/// A vector of R^3_1 or R^4_1. Component 0 is the timelike slot, so the
/// pseudo-scalar product is -x0*y0 + x1*y1 + ...
class MVector {
 public:
  MVector() = default;
  MVector(std::initializer_list<double> values);

  static MVector zero(int dim);
  static MVector basis(int dim, int index);

  int dim() const noexcept { return dim_; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  std::span<const double> components() const { return {c_.data(), static_cast<std::size_t>(dim_)}; }

  MVector& operator+=(const MVector& o);
  MVector& operator-=(const MVector& o);
  MVector& operator*=(double s);
  MVector& operator/=(double s);

  friend bool operator==(const MVector& a, const MVector& b);

 private:
  std::array<double, 4> c_{};
  int dim_ = 3;
};

MVector operator+(MVector a, const MVector& b);
MVector operator-(MVector a, const MVector& b);
MVector operator-(MVector a);
MVector operator*(double s, MVector a);
MVector operator*(MVector a, double s);
MVector operator/(MVector a, double s);
std::ostream& operator<<(std::ostream& os, const MVector& v);

/// Throws UsageError unless both vectors have the same dimension.
void require_same_dim(const MVector& a, const MVector& b);

double mdot(const MVector& x, const MVector& y);
/// Natural magnitude of the terms of mdot(x, y): sum of |x_i y_i|.
double mdot_scale(const MVector& x, const MVector& y);
double mnorm(const MVector& x);

double euclidean_norm_sq(const MVector& x);
double euclidean_norm(const MVector& x);
double euclidean_dot(const MVector& x, const MVector& y);
/// Squared Euclidean area of the parallelogram spanned by x and y, summed
/// over coordinate planes so it stays accurate for nearly parallel inputs.
double euclidean_wedge_sq(const MVector& x, const MVector& y);

enum class CausalType { Spacelike, Timelike, Lightlike };

std::string_view to_string(CausalType c);

/// Lightlike when |<x,x>| <= tol * sum x_i^2, otherwise the sign decides. Invariant under x -> c x.
CausalType causal_type(const MVector& x, double tol = kDefaultTol);

/// +1 for spacelike, -1 for timelike, 0 for lightlike.
int causal_sign(const MVector& x, double tol = kDefaultTol);

/// Pseudo vector product in R^3_1: formal determinant with first row (-e1, e2, e3).
MVector wedge3(const MVector& x, const MVector& y);
/// Pseudo vector product in R^4_1: formal determinant with first row
/// (-e1, e2, e3, e4) followed by rows x, y, z.
MVector wedge4(const MVector& x, const MVector& y, const MVector& z);
/// Ordinary 4x4 determinant of the stacked rows.
double det4(const MVector& a, const MVector& b, const MVector& c, const MVector& d);
/// Ordinary 3x3 determinant of the stacked rows.
double det3(const MVector& a, const MVector& b, const MVector& c);

namespace detail {

// Shared by MVector and the Taylor-series vectors so that both use the same
// sign convention.
template <class T>
T det3_rows(const T& a0, const T& a1, const T& a2, const T& b0, const T& b1, const T& b2,
            const T& c0, const T& c1, const T& c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

template <class Vec>
void wedge3_into(const Vec& x, const Vec& y, Vec& r) {
  r[0] = -(x[1] * y[2] - x[2] * y[1]);
  r[1] = -(x[0] * y[2] - x[2] * y[0]);
  r[2] = x[0] * y[1] - x[1] * y[0];
}

template <class Vec>
void wedge4_into(const Vec& x, const Vec& y, const Vec& z, Vec& r) {
  // Cofactor expansion along the basis row: sign pattern (+,-,+,-) times
  // the row entries (-e1, e2, e3, e4).
  auto minor = [&](int skip) {
    int c[3];
    int k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != skip) c[k++] = j;
    return det3_rows(x[c[0]], x[c[1]], x[c[2]], y[c[0]], y[c[1]], y[c[2]], z[c[0]], z[c[1]],
                     z[c[2]]);
  };
  r[0] = -minor(0);
  r[1] = -minor(1);
  r[2] = minor(2);
  r[3] = -minor(3);
}

}  // namespace detail

}  // namespace focal
