#pragma once

#include <Eigen/Dense>
#include <vector>

#include "austere/matrix.hpp"

namespace austere {

// Which case of the tangent-frame construction applies at the diagonalized
// point: odd n, even n with nonzero smallest eigenvalue pair, or even n with
// a zero pair (which contributes the extra corner vector).
enum class FrameCase { OddN, EvenNonzero, EvenKernel };

// A regular zero-level point with its diagonalization, an orthonormal tangent
// frame and the unit normal frame xi_1, ..., xi_p. Frame vectors are stored
// at the point itself (conjugated back from the diagonal representative).
struct FramedPoint {
  FMat a;
  FMat p_unitary;
  FMat d;
  std::vector<double> lambdas;
  FrameCase case_tag = FrameCase::OddN;
  std::vector<FMat> tangent_frame;
  std::vector<FMat> normal_frame;  // xi_alpha, alpha = 1..p
  std::vector<double> rho;         // |grad f_{2a+1}|
  bool conditioning_warning = false;  // regular but close to the critical set
  int p() const { return static_cast<int>(normal_frame.size()); }
  int tangent_dim() const { return static_cast<int>(tangent_frame.size()); }
};

FramedPoint frame_point(const FMat& a, double tol = 1e-8);

// Shape operator in direction xi_alpha (1-based), as a symmetric matrix in
// tangent-frame coordinates:
//   <S X, Y> = -((2a+1)/rho_a) sum_{r=0}^{2a-1} <X A^r, A^{2a-1-r} Y>.
Eigen::MatrixXd shape_operator(const FramedPoint& fp, int alpha);

// Eigenvalues clustered into (value, multiplicity) pairs; austere iff the
// multiset is symmetric under negation with matching multiplicities.
struct PrincipalSpectrum {
  int alpha = 0;
  std::vector<std::pair<double, int>> clusters;  // value descending
  bool austere = false;
  std::vector<double> raw;  // all eigenvalues, descending
};

PrincipalSpectrum principal_spectrum(const FramedPoint& fp, int alpha);
PrincipalSpectrum cluster_spectrum(const Eigen::VectorXd& eigenvalues, int alpha = 0);

// True iff all shape-operator pairs commute (within tol); trivially true for
// a single normal direction. max_commutator reports the largest norm seen.
bool verify_flat_normal_bundle(const FramedPoint& fp, double tol = 1e-8,
                               double* max_commutator = nullptr);

// Closed form 6m(6m+1) - 2m (tr A^4 - 1/4)^{-1}; refuses points at or near
// the critical orbit where tr A^4 -> 1/4.
double scalar_curvature_b4(const FMat& a, double tol = 1e-8);
// Cross-route: Gauss equation (N-2)(N-3) - |II|^2 from an assembled operator.
double scalar_curvature_b4_gauss(const FramedPoint& fp);

struct FormSignature {
  int nullity = 0;
  int pos_index = 0;
  int neg_index = 0;
};

FormSignature second_form_signature(const FramedPoint& fp, int alpha);

// Dimension of the linear span of the samples inside E(n,F).
int substantiality_rank(const std::vector<FMat>& samples);

}  // namespace austere
