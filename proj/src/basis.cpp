#include "austere/basis.hpp"

#include <numbers>
#include <stdexcept>

namespace austere {

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void check_pair(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("basis element requires 1 <= i < j <= n");
}
}  // namespace

FMat basis_sym(int n, Field f, int i, int j) {
  check_pair(n, i, j);
  FMat m(n, f);
  m.at(i - 1, j - 1) = Quaternion(kInvSqrt2);
  m.at(j - 1, i - 1) = Quaternion(kInvSqrt2);
  return m;
}

FMat basis_skew(int n, Field f, int i, int j) {
  check_pair(n, i, j);
  FMat m(n, f);
  m.at(i - 1, j - 1) = Quaternion(kInvSqrt2);
  m.at(j - 1, i - 1) = Quaternion(-kInvSqrt2);
  return m;
}

FMat basis_q_skew(int n, Field f, int i, int j, const Quaternion& unit) {
  check_pair(n, i, j);
  FMat m(n, f);
  m.at(i - 1, j - 1) = unit * kInvSqrt2;
  m.at(j - 1, i - 1) = unit * (-kInvSqrt2);
  return m;
}

FMat basis_q_sym(int n, Field f, int i, int j, const Quaternion& unit) {
  check_pair(n, i, j);
  FMat m(n, f);
  m.at(i - 1, j - 1) = unit * kInvSqrt2;
  m.at(j - 1, i - 1) = unit * kInvSqrt2;
  return m;
}

FMat basis_diag_pair(int n, Field f, int i) {
  if (!(2 <= i && i <= n))
    throw std::invalid_argument("diag_pair requires 2 <= i <= n");
  FMat m(n, f);
  m.at(0, 0) = Quaternion(kInvSqrt2);
  m.at(i - 1, i - 1) = Quaternion(-kInvSqrt2);
  return m;
}

BasisFamily canonical_basis(int n, Field f) {
  if (n < 2) throw std::invalid_argument("canonical_basis requires n >= 2");
  BasisFamily fam;
  fam.n = n;
  fam.field = f;
  auto push = [&fam](FMat m, std::string name) {
    fam.elements.push_back(std::move(m));
    fam.names.push_back(std::move(name));
  };
  for (int i = 2; i <= n; ++i) push(basis_diag_pair(n, f, i), "D" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      push(basis_sym(n, f, i, j), "S" + std::to_string(i) + std::to_string(j));
  const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  const char* tags[3] = {"i", "j", "k"};
  const int extra = (f == Field::Real) ? 0 : (f == Field::Complex ? 1 : 3);
  for (int u = 0; u < extra; ++u)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        push(basis_q_skew(n, f, i, j, units[u]),
             std::string(tags[u]) + "A" + std::to_string(i) + std::to_string(j));
  return fam;
}

}  // namespace austere
