#pragma once

#include <Eigen/Dense>
#include <vector>

#include "austere/matrix.hpp"

namespace austere {

// Flattens a matrix over F to the 4n^2 real components (w,x,y,z per entry).
// An isomorphism onto its image, so spans and ranks carry over.
Eigen::VectorXd flatten(const FMat& m);

// Rank of a row-stacked matrix by singular value threshold rel_tol * sigma_0.
// gap_ratio (if requested) is sigma_{r-1} / sigma_r at the cut, infinity when
// the trailing singular value is exactly zero.
int numerical_rank(const Eigen::MatrixXd& rows, double rel_tol = 1e-8,
                   double* gap_ratio = nullptr);

// In-place modified Gram-Schmidt under the Frobenius inner product.
// Returns the condition estimate of the input block (ratio of extreme
// singular values of its Gram matrix, sqrt'd).
double orthonormalize(std::vector<FMat>& block);

}  // namespace austere
