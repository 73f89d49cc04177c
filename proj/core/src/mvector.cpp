#include "focal/mvector.hpp"

#include <ostream>
#include <string>

#include "focal/errors.hpp"

namespace focal {

MVector::MVector(std::initializer_list<double> values) {
  if (values.size() != 3 && values.size() != 4)
    throw UsageError("MVector needs 3 or 4 components, got " + std::to_string(values.size()));
  dim_ = static_cast<int>(values.size());
  std::size_t i = 0;
  for (double v : values) c_[i++] = v;
}

MVector MVector::zero(int dim) {
  if (dim != 3 && dim != 4) throw UsageError("MVector dimension must be 3 or 4");
  MVector v;
  v.dim_ = dim;
  return v;
}

MVector MVector::basis(int dim, int index) {
  MVector v = zero(dim);
  if (index < 0 || index >= dim) throw UsageError("basis index out of range");
  v[index] = 1.0;
  return v;
}

void require_same_dim(const MVector& a, const MVector& b) {
  if (a.dim() != b.dim())
    throw UsageError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
}

MVector& MVector::operator+=(const MVector& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim_; ++i) (*this)[i] += o[i];
  return *this;
}

MVector& MVector::operator-=(const MVector& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim_; ++i) (*this)[i] -= o[i];
  return *this;
}

MVector& MVector::operator*=(double s) {
  for (int i = 0; i < dim_; ++i) (*this)[i] *= s;
  return *this;
}

MVector& MVector::operator/=(double s) {
  for (int i = 0; i < dim_; ++i) (*this)[i] /= s;
  return *this;
}

bool operator==(const MVector& a, const MVector& b) {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

MVector operator+(MVector a, const MVector& b) { return a += b; }
MVector operator-(MVector a, const MVector& b) { return a -= b; }
MVector operator-(MVector a) { return a *= -1.0; }
MVector operator*(double s, MVector a) { return a *= s; }
MVector operator*(MVector a, double s) { return a *= s; }
MVector operator/(MVector a, double s) { return a /= s; }

std::ostream& operator<<(std::ostream& os, const MVector& v) {
  os << '(';
  for (int i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

double mdot(const MVector& x, const MVector& y) {
  require_same_dim(x, y);
  double s = -x[0] * y[0];
  for (int i = 1; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

double mdot_scale(const MVector& x, const MVector& y) {
  require_same_dim(x, y);
  double s = 0.0;
  for (int i = 0; i < x.dim(); ++i) s += std::abs(x[i] * y[i]);
  return s;
}

double mnorm(const MVector& x) { return std::sqrt(std::abs(mdot(x, x))); }

double euclidean_norm_sq(const MVector& x) {
  double s = 0.0;
  for (int i = 0; i < x.dim(); ++i) s += x[i] * x[i];
  return s;
}

double euclidean_norm(const MVector& x) { return std::sqrt(euclidean_norm_sq(x)); }

double euclidean_dot(const MVector& x, const MVector& y) {
  require_same_dim(x, y);
  double s = 0.0;
  for (int i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

double euclidean_wedge_sq(const MVector& x, const MVector& y) {
  require_same_dim(x, y);
  double s = 0.0;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = i + 1; j < x.dim(); ++j) {
      double m = x[i] * y[j] - x[j] * y[i];
      s += m * m;
    }
  return s;
}

std::string_view to_string(CausalType c) {
  switch (c) {
    case CausalType::Spacelike: return "spacelike";
    case CausalType::Timelike: return "timelike";
    case CausalType::Lightlike: return "lightlike";
  }
  return "?";
}

CausalType causal_type(const MVector& x, double tol) {
  const double q = mdot(x, x);
  // Purely relative gate so that x and c x always get the same tag.
  if (std::abs(q) <= tol * euclidean_norm_sq(x)) return CausalType::Lightlike;
  return q > 0 ? CausalType::Spacelike : CausalType::Timelike;
}

int causal_sign(const MVector& x, double tol) {
  switch (causal_type(x, tol)) {
    case CausalType::Spacelike: return 1;
    case CausalType::Timelike: return -1;
    case CausalType::Lightlike: return 0;
  }
  return 0;
}

MVector wedge3(const MVector& x, const MVector& y) {
  require_same_dim(x, y);
  if (x.dim() != 3) throw UsageError("wedge3 needs 3-vectors");
  MVector r = MVector::zero(3);
  detail::wedge3_into(x, y, r);
  return r;
}

MVector wedge4(const MVector& x, const MVector& y, const MVector& z) {
  require_same_dim(x, y);
  require_same_dim(x, z);
  if (x.dim() != 4) throw UsageError("wedge4 needs 4-vectors");
  MVector r = MVector::zero(4);
  detail::wedge4_into(x, y, z, r);
  return r;
}

double det3(const MVector& a, const MVector& b, const MVector& c) {
  require_same_dim(a, b);
  require_same_dim(a, c);
  if (a.dim() != 3) throw UsageError("det3 needs 3-vectors");
  return detail::det3_rows(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
}

double det4(const MVector& a, const MVector& b, const MVector& c, const MVector& d) {
  require_same_dim(a, b);
  require_same_dim(a, c);
  require_same_dim(a, d);
  if (a.dim() != 4) throw UsageError("det4 needs 4-vectors");
  // Laplace expansion along the first row.
  double s = 0.0;
  for (int j = 0; j < 4; ++j) {
    int c3[3];
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != j) c3[k++] = i;
    const double m = detail::det3_rows(b[c3[0]], b[c3[1]], b[c3[2]], c[c3[0]], c[c3[1]], c[c3[2]],
                                       d[c3[0]], d[c3[1]], d[c3[2]]);
    s += ((j % 2) ? -1.0 : 1.0) * a[j] * m;
  }
  return s;
}

}  // namespace focal
