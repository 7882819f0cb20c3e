#pragma once

#include <string>
#include <vector>

#include "austere/matrix.hpp"

namespace austere {

// Elementary Hermitian building blocks, all with Frobenius norm 1:
//   sym(i,j)      = (E_ij + E_ji)/sqrt2                    (i < j)
//   skew(i,j)     = (E_ij - E_ji)/sqrt2                    (i < j, antisymmetric)
//   q_skew(i,j)   = q * skew(i,j) for q in {i,j,k}          (Hermitian)
//   diag_pair(i)  = (E_11 - E_ii)/sqrt2                    (2 <= i <= n)
FMat basis_sym(int n, Field f, int i, int j);
FMat basis_skew(int n, Field f, int i, int j);
FMat basis_q_skew(int n, Field f, int i, int j, const Quaternion& unit);
FMat basis_q_sym(int n, Field f, int i, int j, const Quaternion& unit);
FMat basis_diag_pair(int n, Field f, int i);

struct BasisFamily {
  int n = 0;
  Field field = Field::Real;
  std::vector<FMat> elements;
  std::vector<std::string> names;
};

// Ordered basis of the traceless Hermitian matrices E(n,F).
// Order: diag_pair(2..n), then sym(i,j) lexicographic, then for C/H the
// i-, j-, k-scaled skew families, each lexicographic. Linearly independent
// (the diagonal block is not mutually orthogonal); count = ambient_dim(n,f).
BasisFamily canonical_basis(int n, Field f);

}  // namespace austere
