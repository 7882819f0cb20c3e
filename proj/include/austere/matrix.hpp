#pragma once

#include <vector>

#include "austere/field.hpp"
#include "austere/quaternion.hpp"

namespace austere {

// Dense n x n matrix over R, C or H with a uniform quaternion entry type.
// Entries of a Real matrix must have x = y = z = 0, of a Complex matrix
// y = z = 0; operations preserve the subfield and check compatibility.
class FMat {
 public:
  FMat() = default;
  FMat(int n, Field f) : n_(n), field_(f), a_(static_cast<size_t>(n) * n) {}

  static FMat zero(int n, Field f) { return FMat(n, f); }
  static FMat identity(int n, Field f);
  static FMat diag(const std::vector<double>& d, Field f);

  int n() const { return n_; }
  Field field() const { return field_; }

  Quaternion& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Quaternion& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  FMat conj_transpose() const;
  FMat transpose() const;

  Quaternion trace() const;
  // Real part of the trace (the trace of a Hermitian power is real).
  double rtrace() const;

  FMat operator-() const;
  FMat& operator+=(const FMat& o);
  FMat& operator-=(const FMat& o);
  FMat& operator*=(double s);

  friend FMat operator+(FMat a, const FMat& b) { return a += b; }
  friend FMat operator-(FMat a, const FMat& b) { return a -= b; }
  friend FMat operator*(FMat a, double s) { return a *= s; }
  friend FMat operator*(double s, FMat a) { return a *= s; }
  friend FMat operator*(const FMat& a, const FMat& b);

  // A^k by repeated multiplication; keeps derivative formulas literal.
  FMat pow(int k) const;

  // <A,B> = Re tr(A B*), the real inner product on M(n,F).
  friend double frobenius_inner(const FMat& a, const FMat& b);
  double norm() const;

  double max_abs_entry() const;
  bool is_hermitian(double atol = 1e-10) const;
  bool entries_in_field(double atol = 0.0) const;

  // Conjugation P* A P without forming P* separately.
  FMat conjugated_by(const FMat& p) const;

  bool same_shape(const FMat& o) const { return n_ == o.n_ && field_ == o.field_; }

 private:
  int n_ = 0;
  Field field_ = Field::Real;
  std::vector<Quaternion> a_;
};

void require_same_shape(const FMat& a, const FMat& b, const char* where);

}  // namespace austere
