#include "focal/taylor.hpp"

#include <algorithm>
#include <cmath>

#include "focal/errors.hpp"

namespace focal {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_order(int order) {
  if (order < 0 || order > kMaxJetOrder)
    throw UsageError("series order must lie in [0, " + std::to_string(kMaxJetOrder) + "]");
}

// Shared recurrence for (sin, cos) and (sinh, cosh): s' = a' c, c' = sign * a' s.
void trig_pair(const Series& a, double sign, Series& s, Series& c) {
  const int n = a.order();
  for (int k = 1; k <= n; ++k) {
    double ss = 0.0;
    double cc = 0.0;
    for (int j = 1; j <= k; ++j) {
      ss += j * a[j] * c[k - j];
      cc += j * a[j] * s[k - j];
    }
    s[k] = ss / k;
    c[k] = sign * cc / k;
  }
}

}  // namespace

Series::Series(int order, double value) : order_(order) {
  check_order(order);
  c_[0] = value;
}

Series Series::variable(int order, double base) {
  Series s(order, base);
  if (order >= 1) s[1] = 1.0;
  return s;
}

double Series::derivative(int k) const { return k > order_ ? 0.0 : c_[static_cast<std::size_t>(k)] * factorial(k); }

Series Series::truncated(int order) const {
  Series r = *this;
  r.order_ = std::min(order, order_);
  for (int k = r.order_ + 1; k < kCapacity; ++k) r[k] = 0.0;
  return r;
}

Series& Series::operator+=(const Series& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k) c_[k] += o[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k) c_[k] -= o[k];
  return *this;
}

Series& Series::operator*=(const Series& o) { return *this = *this * o; }
Series& Series::operator/=(const Series& o) { return *this = *this / o; }

Series& Series::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Series& Series::operator-=(double s) {
  c_[0] -= s;
  return *this;
}

Series& Series::operator*=(double s) {
  for (int k = 0; k <= order_; ++k) c_[k] *= s;
  return *this;
}

Series& Series::operator/=(double s) {
  for (int k = 0; k <= order_; ++k) c_[k] /= s;
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator-(Series a) { return a *= -1.0; }
Series operator+(Series a, double s) { return a += s; }
Series operator+(double s, Series a) { return a += s; }
Series operator-(Series a, double s) { return a -= s; }
Series operator-(double s, const Series& a) { return -a + s; }
Series operator*(Series a, double s) { return a *= s; }
Series operator*(double s, Series a) { return a *= s; }
Series operator/(Series a, double s) { return a /= s; }

Series operator/(double s, const Series& a) { return Series(a.order(), s) / a; }

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series r(n, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
    r[k] = s;
  }
  return r;
}

Series operator/(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  if (b[0] == 0.0) throw DomainError("series division by zero");
  Series q(n, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = a[k];
    for (int i = 1; i <= k; ++i) s -= b[i] * q[k - i];
    q[k] = s / b[0];
  }
  return q;
}

Series exp(const Series& a) {
  const int n = a.order();
  Series e(n, std::exp(a[0]));
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a[j] * e[k - j];
    e[k] = s / k;
  }
  return e;
}

Series log(const Series& a) {
  if (!(a[0] > 0.0)) throw DomainError("series log of non-positive value");
  const int n = a.order();
  Series l(n, std::log(a[0]));
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j < k; ++j) s += j * l[j] * a[k - j];
    l[k] = (a[k] - s / k) / a[0];
  }
  return l;
}

Series sqrt(const Series& a) {
  if (!(a[0] > 0.0)) {
    if (a[0] == 0.0 && a.order() == 0) return a;
    throw DomainError("series sqrt of non-positive value");
  }
  const int n = a.order();
  Series r(n, std::sqrt(a[0]));
  for (int k = 1; k <= n; ++k) {
    double s = a[k];
    for (int j = 1; j < k; ++j) s -= r[j] * r[k - j];
    r[k] = s / (2.0 * r[0]);
  }
  return r;
}

Series sin(const Series& a) {
  Series s(a.order(), std::sin(a[0]));
  Series c(a.order(), std::cos(a[0]));
  trig_pair(a, -1.0, s, c);
  return s;
}

Series cos(const Series& a) {
  Series s(a.order(), std::sin(a[0]));
  Series c(a.order(), std::cos(a[0]));
  trig_pair(a, -1.0, s, c);
  return c;
}

Series sinh(const Series& a) {
  Series s(a.order(), std::sinh(a[0]));
  Series c(a.order(), std::cosh(a[0]));
  trig_pair(a, 1.0, s, c);
  return s;
}

Series cosh(const Series& a) {
  Series s(a.order(), std::sinh(a[0]));
  Series c(a.order(), std::cosh(a[0]));
  trig_pair(a, 1.0, s, c);
  return c;
}

Series tan(const Series& a) { return sin(a) / cos(a); }

Series pow(const Series& a, int n) {
  if (n == 0) return Series(a.order(), 1.0);
  Series r(a.order(), 1.0);
  const int m = n < 0 ? -n : n;
  for (int i = 0; i < m; ++i) r = r * a;
  return n < 0 ? 1.0 / r : r;
}

Series pow(const Series& a, double p) {
  if (!(a[0] > 0.0)) throw DomainError("series real power of non-positive base");
  return exp(p * log(a));
}

Series derivative(const Series& a) {
  if (a.order() == 0) return Series(0, 0.0);
  Series d(a.order() - 1, 0.0);
  for (int k = 0; k < a.order(); ++k) d[k] = (k + 1) * a[k + 1];
  return d;
}

Series compose(const Series& a, const Series& b) {
  if (b[0] != 0.0) throw UsageError("compose needs an inner series without constant term");
  const int n = std::min(a.order(), b.order());
  Series r(n, a[n]);
  for (int k = n - 1; k >= 0; --k) r = r * b.truncated(n) + a[k];
  return r.truncated(n);
}

Series revert(const Series& a) {
  if (a[0] != 0.0 || a.order() < 1 || a[1] == 0.0)
    throw UsageError("revert needs a[0] = 0 and a[1] != 0");
  const int n = a.order();
  const Series u = Series::variable(n, 0.0);
  Series higher = a;
  higher[1] = 0.0;
  Series h = u / a[1];
  // Each fixed-point sweep fixes one more coefficient.
  for (int it = 1; it < n; ++it) h = (u - compose(higher, h)) / a[1];
  return h;
}

SeriesVec::SeriesVec(int dim, int order) : dim_(dim) {
  if (dim != 3 && dim != 4) throw UsageError("SeriesVec dimension must be 3 or 4");
  for (auto& s : c_) s = Series(order, 0.0);
}

SeriesVec SeriesVec::constant(const MVector& v, int order) {
  SeriesVec r(v.dim(), order);
  for (int i = 0; i < v.dim() && i < 4; ++i) r[i] = Series(order, v[i]);
  return r;
}

int SeriesVec::order() const {
  int o = c_[0].order();
  for (int i = 1; i < dim_; ++i) o = std::min(o, c_[static_cast<std::size_t>(i)].order());
  return o;
}

MVector SeriesVec::coeff(int k) const {
  MVector v = MVector::zero(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = k > (*this)[i].order() ? 0.0 : (*this)[i][k];
  return v;
}

MVector SeriesVec::derivative(int k) const {
  MVector v = MVector::zero(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = (*this)[i].derivative(k);
  return v;
}

SeriesVec& SeriesVec::operator+=(const SeriesVec& o) {
  if (o.dim_ != dim_) throw UsageError("SeriesVec dimension mismatch");
  for (int i = 0; i < dim_; ++i) (*this)[i] += o[i];
  return *this;
}

SeriesVec& SeriesVec::operator-=(const SeriesVec& o) {
  if (o.dim_ != dim_) throw UsageError("SeriesVec dimension mismatch");
  for (int i = 0; i < dim_; ++i) (*this)[i] -= o[i];
  return *this;
}

SeriesVec& SeriesVec::operator*=(const Series& s) {
  for (int i = 0; i < dim_; ++i) (*this)[i] = (*this)[i] * s;
  return *this;
}

SeriesVec operator+(SeriesVec a, const SeriesVec& b) { return a += b; }
SeriesVec operator-(SeriesVec a, const SeriesVec& b) { return a -= b; }
SeriesVec operator*(const Series& s, SeriesVec a) { return a *= s; }

SeriesVec operator*(double s, SeriesVec a) {
  for (int i = 0; i < a.dim(); ++i) a[i] *= s;
  return a;
}

SeriesVec operator/(SeriesVec a, const Series& s) {
  const Series inv = 1.0 / s;
  return a *= inv;
}

Series mdot(const SeriesVec& x, const SeriesVec& y) {
  if (x.dim() != y.dim()) throw UsageError("SeriesVec dimension mismatch");
  Series s = -(x[0] * y[0]);
  for (int i = 1; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

SeriesVec derivative(const SeriesVec& a) {
  SeriesVec r(a.dim(), std::max(a.order() - 1, 0));
  for (int i = 0; i < a.dim(); ++i) r[i] = derivative(a[i]);
  return r;
}

SeriesVec compose(const SeriesVec& a, const Series& b) {
  SeriesVec r(a.dim(), std::min(a.order(), b.order()));
  for (int i = 0; i < a.dim(); ++i) r[i] = compose(a[i], b);
  return r;
}

SeriesVec wedge3(const SeriesVec& x, const SeriesVec& y) {
  if (x.dim() != 3 || y.dim() != 3) throw UsageError("wedge3 needs 3-vectors");
  SeriesVec r(3, std::min(x.order(), y.order()));
  detail::wedge3_into(x, y, r);
  return r;
}

SeriesVec wedge4(const SeriesVec& x, const SeriesVec& y, const SeriesVec& z) {
  if (x.dim() != 4 || y.dim() != 4 || z.dim() != 4) throw UsageError("wedge4 needs 4-vectors");
  SeriesVec r(4, std::min({x.order(), y.order(), z.order()}));
  detail::wedge4_into(x, y, z, r);
  return r;
}

Series det4(const SeriesVec& a, const SeriesVec& b, const SeriesVec& c, const SeriesVec& d) {
  if (a.dim() != 4 || b.dim() != 4 || c.dim() != 4 || d.dim() != 4)
    throw UsageError("det4 needs 4-vectors");
  // <a, b^c^d> equals det(a; b; c; d) for the first-row wedge convention.
  return mdot(a, wedge4(b, c, d));
}

}  // namespace focal
