#pragma once

#include <vector>

#include "austere/matrix.hpp"

namespace austere {

// Eigendecomposition of a Hermitian A: P* A P = diag(values), values sorted
// descending, columns of P orthonormal over the base field. Quaternionic
// matrices are solved through the complex 2n x 2n embedding
// q = a + b j  ->  [[a, b], [-conj(b), conj(a)]]; the doubled eigenvalues are
// collapsed and quaternionic eigenvectors rebuilt from the embedded ones.
struct HermEigen {
  std::vector<double> values;
  FMat P;
};

HermEigen hermitian_eigen(const FMat& a, double atol = 1e-10);

// Reorders an eigendecomposition into the balanced diagonal form
// diag(l1, -l1, ..., lp, -lp[, l_{p+1}]) with l1 >= ... >= 0. Requires the
// spectrum to be negation-symmetric within tol (all odd power traces small),
// otherwise throws "not austere-diagonalizable".
struct BalancedForm {
  FMat P;                       // unitary, P* A P = D
  FMat D;                       // balanced diagonal
  std::vector<double> lambdas;  // l1 >= l2 >= ... >= l_{p+1} (odd n: unpaired slot last)
};

BalancedForm balanced_normal_form(const FMat& a, double tol = 1e-8);

}  // namespace austere
