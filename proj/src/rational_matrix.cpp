#include "austere/rational_matrix.hpp"

#include <stdexcept>

namespace austere {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool RatMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const Rat& r : a_)
    if (r != 0) return false;
  return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("RatMatrix: size mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("RatMatrix: size mismatch");
  const int n = a.n_;
  RatMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

RatMatrix operator*(const Rat& s, RatMatrix a) {
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) a.at(i, j) *= s;
  return a;
}

int RatMatrix::rank() const {
  std::vector<std::vector<Rat>> m(static_cast<size_t>(n_), std::vector<Rat>(static_cast<size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int row = rank; row < n_; ++row)
      if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
    const Rat inv = 1 / m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
    for (int row = rank + 1; row < n_; ++row) {
      const Rat f = m[static_cast<size_t>(row)][static_cast<size_t>(col)] * inv;
      if (f == 0) continue;
      for (int j = col; j < n_; ++j)
        m[static_cast<size_t>(row)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
    }
    ++rank;
  }
  return rank;
}

Rat parse_rational(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace austere
