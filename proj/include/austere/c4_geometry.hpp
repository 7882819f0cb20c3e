#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "austere/matrix.hpp"

namespace austere {

// Geometry of the critical orbit at the base point A0 = diag(1,1,-1,-1)/2.

// Any normal vector at A0 is block diagonal:
//   xi = [[c, a], [conj(a), -c]] (+) [[d, b], [conj(b), -d]]
// with a, b in F and c, d real.
struct NormalDirection {
  Quaternion a;
  Quaternion b;
  double c = 0.0;
  double d = 0.0;

  FMat to_matrix(Field f) const;
  static NormalDirection from_matrix(const FMat& xi, double atol = 1e-10);
};

struct C4Frame {
  FMat a0;
  std::vector<FMat> tangent_basis;   // sym(1,3), sym(1,4), sym(2,3), sym(2,4), then q-families
  std::vector<FMat> tangent_gen;     // antihermitian generators of the tangent curves
  std::vector<FMat> normal_basis;    // sym(1,2), sym(3,4), eta1, eta2, then q-families
};

C4Frame c4_frame(Field f);

// Shape operator in the ordered tangent basis:
//   S_xi(v) = -([xi, g_v])^T  with g_v the generator of the curve through v.
Eigen::MatrixXd c4_shape_operator(const NormalDirection& xi, Field f);

// The isotropy element P_xi = diag(P1, P2) with P_xi* A0 P_xi = A0 and
// P_xi* xi P_xi = -xi; degenerate blocks fall back to diag(1,-1).
FMat isotropy_reflection(const NormalDirection& xi, Field f);

// Spectrum of S_xi negation-symmetric for `trials` random unit normals.
bool verify_c4_austere(Field f, int trials, std::uint64_t seed, double* worst_residual = nullptr,
                       int threads = 0);

// Representation matrices of the shape operators in the ordered bases, scaled
// by sqrt(2) so the entries are integers: for R the four operators of
// sym(1,2), sym(3,4), eta1, eta2; for C additionally i*skew(1,2), i*skew(3,4).
std::vector<Eigen::MatrixXi> c4_rep_int(Field f);

// Conjugating orthogonal matrix scaled by sqrt(2) (entries integer,
// Q_int^T Q_int = 2 I); conjugation by the unscaled matrix is
// (1/2) Q_int^T M Q_int.
Eigen::MatrixXi c4_conjugator_int(Field f);

// Entrywise agreement of the assembled operators with the pinned displays,
// and membership of the conjugated span in the block normal form. Returns
// false with the largest offending entry in *max_residual.
bool bryant_normal_form_check(Field f, double* max_residual = nullptr);

}  // namespace austere
