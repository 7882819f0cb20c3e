#include "austere/matrix.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace austere {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << "," << q.x << "," << q.y << "," << q.z << ")";
}

void require_same_shape(const FMat& a, const FMat& b, const char* where) {
  if (!a.same_shape(b))
    throw std::invalid_argument(std::string(where) + ": dimension or field mismatch");
}

FMat FMat::identity(int n, Field f) {
  FMat m(n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Quaternion(1.0);
  return m;
}

FMat FMat::diag(const std::vector<double>& d, Field f) {
  FMat m(static_cast<int>(d.size()), f);
  for (int i = 0; i < m.n(); ++i) m.at(i, i) = Quaternion(d[static_cast<size_t>(i)]);
  return m;
}

FMat FMat::conj_transpose() const {
  FMat r(n_, field_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i).conj();
  return r;
}

FMat FMat::transpose() const {
  FMat r(n_, field_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

Quaternion FMat::trace() const {
  Quaternion t;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

double FMat::rtrace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i).w;
  return t;
}

FMat FMat::operator-() const {
  FMat r(n_, field_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

FMat& FMat::operator+=(const FMat& o) {
  require_same_shape(*this, o, "FMat::operator+=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

FMat& FMat::operator-=(const FMat& o) {
  require_same_shape(*this, o, "FMat::operator-=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

FMat& FMat::operator*=(double s) {
  for (auto& q : a_) q *= s;
  return *this;
}

FMat operator*(const FMat& a, const FMat& b) {
  require_same_shape(a, b, "FMat::operator*");
  const int n = a.n();
  FMat r(n, a.field());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Quaternion aik = a.at(i, k);
      if (aik.norm2() == 0.0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

FMat FMat::pow(int k) const {
  if (k < 0) throw std::invalid_argument("FMat::pow: negative exponent");
  FMat r = identity(n_, field_);
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

double frobenius_inner(const FMat& a, const FMat& b) {
  require_same_shape(a, b, "frobenius_inner");
  // Re tr(A B*) = sum_{ij} Re(A_ij conj(B_ij)) = componentwise dot product.
  double s = 0.0;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) {
      const Quaternion &p = a.at(i, j), &q = b.at(i, j);
      s += p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
    }
  return s;
}

double FMat::norm() const { return std::sqrt(frobenius_inner(*this, *this)); }

double FMat::max_abs_entry() const {
  double m = 0.0;
  for (const auto& q : a_) m = std::max(m, std::sqrt(q.norm2()));
  return m;
}

bool FMat::is_hermitian(double atol) const {
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      const Quaternion d = at(i, j) - at(j, i).conj();
      if (d.norm() > atol) return false;
    }
  return true;
}

bool FMat::entries_in_field(double atol) const {
  for (const auto& q : a_) {
    if (field_ == Field::Real && (std::abs(q.x) > atol || std::abs(q.y) > atol || std::abs(q.z) > atol))
      return false;
    if (field_ == Field::Complex && (std::abs(q.y) > atol || std::abs(q.z) > atol)) return false;
  }
  return true;
}

FMat FMat::conjugated_by(const FMat& p) const { return p.conj_transpose() * (*this) * p; }

}  // namespace austere
