#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace austere {

using Rat = mpq_class;

// Dense square matrix with exact rational entries. Floating inputs are never
// converted implicitly; exactness is the whole point of this layer.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static RatMatrix zero(int n) { return RatMatrix(n); }
  static RatMatrix identity(int n);

  int n() const { return n_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  RatMatrix transpose() const;
  Rat trace() const;
  bool is_symmetric() const;
  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& o);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& s, RatMatrix a);

  // Exact rank by fraction-free Gaussian elimination.
  int rank() const;

 private:
  int n_ = 0;
  std::vector<Rat> a_;
};

Rat parse_rational(const std::string& s);
std::string rational_to_string(const Rat& r);

}  // namespace austere
