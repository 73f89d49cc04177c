#pragma once

#include <array>

#include "focal/mvector.hpp"

namespace focal {

/// Highest derivative order carried by any jet.
inline constexpr int kMaxJetOrder = 6;

/// Truncated Taylor series sum_{k<=order} c_k h^k about a base point.
/// Coefficients are divided by k!; use derivative(k) for plain derivatives.
/// Binary operations truncate to the smaller order of the operands.
class Series {
 public:
  static constexpr int kCapacity = kMaxJetOrder + 1;

  Series() = default;
  Series(int order, double value);

  static Series constant(int order, double value) { return Series(order, value); }
  /// The identity h -> base + h.
  static Series variable(int order, double base);

  int order() const noexcept { return order_; }
  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  double value() const { return c_[0]; }
  /// k-th plain derivative at the base point.
  double derivative(int k) const;

  Series truncated(int order) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator/=(const Series& o);
  Series& operator+=(double s);
  Series& operator-=(double s);
  Series& operator*=(double s);
  Series& operator/=(double s);

 private:
  std::array<double, kCapacity> c_{};
  int order_ = 0;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator/(const Series& a, const Series& b);
Series operator-(Series a);
Series operator+(Series a, double s);
Series operator+(double s, Series a);
Series operator-(Series a, double s);
Series operator-(double s, const Series& a);
Series operator*(Series a, double s);
Series operator*(double s, Series a);
Series operator/(Series a, double s);
Series operator/(double s, const Series& a);

// The elementary functions below assume the base value is inside their
// domain; callers that need a named error check before calling.
Series exp(const Series& a);
Series log(const Series& a);
Series sqrt(const Series& a);
Series sin(const Series& a);
Series cos(const Series& a);
Series sinh(const Series& a);
Series cosh(const Series& a);
Series tan(const Series& a);
/// Integer power by repeated multiplication; negative exponents invert.
Series pow(const Series& a, int n);
/// Real power through exp(p log a); requires a.value() > 0.
Series pow(const Series& a, double p);

/// d/dh, one order lower.
Series derivative(const Series& a);
/// Composition a(b(u)) for b with zero constant term.
Series compose(const Series& a, const Series& b);
/// Series inverse u -> h of h -> a(h), for a with a[0] = 0, a[1] != 0.
Series revert(const Series& a);

/// A 3- or 4-vector of series sharing one base point.
class SeriesVec {
 public:
  SeriesVec() = default;
  SeriesVec(int dim, int order);
  /// Vector whose components are constants (zero higher coefficients).
  static SeriesVec constant(const MVector& v, int order);

  int dim() const noexcept { return dim_; }
  int order() const;
  const Series& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Series& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  /// Vector of the k-th Taylor coefficients.
  MVector coeff(int k) const;
  MVector value() const { return coeff(0); }
  /// Vector of k-th plain derivatives.
  MVector derivative(int k) const;

  SeriesVec& operator+=(const SeriesVec& o);
  SeriesVec& operator-=(const SeriesVec& o);
  SeriesVec& operator*=(const Series& s);

 private:
  std::array<Series, 4> c_{};
  int dim_ = 3;
};

SeriesVec operator+(SeriesVec a, const SeriesVec& b);
SeriesVec operator-(SeriesVec a, const SeriesVec& b);
SeriesVec operator*(const Series& s, SeriesVec a);
SeriesVec operator*(double s, SeriesVec a);
SeriesVec operator/(SeriesVec a, const Series& s);

Series mdot(const SeriesVec& x, const SeriesVec& y);
SeriesVec derivative(const SeriesVec& a);
SeriesVec compose(const SeriesVec& a, const Series& b);
SeriesVec wedge3(const SeriesVec& x, const SeriesVec& y);
SeriesVec wedge4(const SeriesVec& x, const SeriesVec& y, const SeriesVec& z);
Series det4(const SeriesVec& a, const SeriesVec& b, const SeriesVec& c, const SeriesVec& d);

}  // namespace focal
