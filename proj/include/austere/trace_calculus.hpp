#pragma once

#include <vector>

#include "austere/matrix.hpp"

namespace austere {

// tr A^k as a real number (imaginary parts of Hermitian power traces vanish).
double trace_power(const FMat& a, int k);

// Gradient of A -> tr A^k on the ambient space E(n,F) and on its unit sphere:
//   grad_ambient = k [A^{k-1} - (1/n)(tr A^{k-1}) I]
//   grad_sphere  = k [A^{k-1} - (tr A^k) A - (1/n)(tr A^{k-1}) I]
struct GradientReport {
  int k = 0;
  FMat at;
  FMat grad_ambient;
  FMat grad_sphere;
  double norm_sphere = 0.0;
};

GradientReport grad_sphere(const FMat& a, int k, double atol = 1e-8);

// Hessian of the restriction to the sphere, evaluated on tangent vectors:
//   Hess(X,Y) = k sum_{l=0}^{k-2} <X A^l, A^{k-l-2} Y> - k (tr A^k) <X,Y>.
double hessian_sphere(const FMat& a, int k, const FMat& x, const FMat& y, double atol = 1e-8);

// (f_3, f_5, ..., f_{2p+1}) with p = floor((n-1)/2); empty for n = 2.
std::vector<double> phi_map(const FMat& a, double atol = 1e-8);

// Regular/critical classification of a zero-level point. The Gram determinant
// of the sphere gradients of f_3, ..., f_{2p+1} is cross-checked against
// pairwise distinctness of the balanced eigenvalues; the two verdicts must
// agree whenever both are decisive.
struct RegularityVerdict {
  FMat at;
  std::vector<double> phi_values;
  double gram_det = 0.0;
  double threshold = 0.0;       // 1e-8 * prod(rho_a^2), the Hadamard-scaled cut
  bool is_regular = false;      // determinant side: |gram_det| > threshold
  bool lambda_distinct = false; // eigenvalue side: min pairwise gap > 1e-6
  bool indeterminate = false;   // at least one criterion inside its band
  std::vector<double> lambdas;
};

RegularityVerdict gram_regularity(const FMat& a, double phi_tol = 1e-8);

}  // namespace austere
