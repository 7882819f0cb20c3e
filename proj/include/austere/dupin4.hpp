#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "austere/matrix.hpp"

namespace austere {

// The five principal curvature functions on the principal-orbit part of the
// n = 4 family, in the closed form
//   k1 = 3(l1+l2)/rho1, k2 = -k1, k3 = 3(l1-l2)/rho1, k4 = -k3, k5 = 0,
// with multiplicities m, m, m, m, 2m+1.
struct KappaProfile {
  std::array<double, 5> kappas{};
  std::array<int, 5> multiplicities{};
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double rho1 = 0.0;
};

KappaProfile kappa_profile(const FMat& a, double tol = 1e-8);

// Principal direction carried by each curvature at P* D P, D in the ordered
// diagonal set diag(l1, -l1, l2, -l2). The shape-operator sign convention
// <S X, Y> = -(1/rho) Hess f3(X, Y) pins the assignment:
//   k1 <-> sym(2,4), k2 <-> sym(1,3), k3 <-> sym(2,3), k4 <-> sym(1,4),
//   k5 <-> {sym(1,2), sym(3,4), X_1}.
std::pair<int, int> principal_direction_pair(int kappa_index);

// gamma_{ij}(t) = (exp(t K_ij) P)* D (exp(t K_ij) P) with K_ij the normalized
// antisymmetric generator; a curvature circle of the hypersurface. The pair
// must be one of (1,3), (2,4), (1,4), (2,3).
FMat curvature_circle(const FMat& p, const FMat& d, std::pair<int, int> pair, double t);

// Point of the Lie-metric space R^{N+2} split as (a, B, c) with the signature
// (-, +, ..., +, -) inner product.
struct LieVector {
  double a = 0.0;
  FMat b;
  double c = 0.0;
};

double lie_inner(const LieVector& u, const LieVector& v);

struct LegendreLift {
  LieVector z1;                    // (1, A, 0)
  LieVector zlast;                 // (0, xi_1(A), 1)
  std::array<LieVector, 5> k;      // curvature spheres k_i = kappa_i z1 + zlast
  KappaProfile profile;
};

LegendreLift legendre_lift(const FMat& a);

// Rank of the span of sampled curvature-sphere vectors K_i(A_s); gap_ratio
// reports the singular-value gap at the cut.
int curvature_sphere_span(int i, Field f, int n_samples, std::uint64_t seed,
                          double* gap_ratio = nullptr);

// Chart bookkeeping on the diagonal slice (F = R): recover (P, D0) with
// B = P* D0 P by re-diagonalization in the ordered-diagonal convention,
// selecting eigenvector signs against a reference unitary.
struct ChartPoint {
  FMat p;   // SO(4) factor, B = P* D0 P
  FMat d0;  // ordered diagonal representative
};

ChartPoint chart_inverse(const FMat& b, const FMat& p_ref);

// Y_{ij}(B) = P* sym(i,j) P through the inverse chart.
FMat y_field(const FMat& b, std::pair<int, int> pair, const FMat& p_ref);

// Exact flow of the unit field Y_{ij} for time t starting at B.
FMat flow_y(const FMat& b, std::pair<int, int> pair, double t, const FMat& p_ref);

// Lie bracket [Y_{pair1}, Y_{pair2}] at a diagonal point, via the closed-form
// covariant derivatives; the finite-difference route composes the four flow
// legs of the commutator loop (symmetrized in the step).
FMat bracket_fields(const FMat& d, std::pair<int, int> pair1, std::pair<int, int> pair2);
FMat bracket_fields_fd(const FMat& d, std::pair<int, int> pair1, std::pair<int, int> pair2,
                       double h = 1e-4);

// Non-integrability of every principal conullity, via the five bracket
// obstructions; true iff each bracket has a nonzero component in the matched
// principal distribution.
bool weak_irreducibility_check(const FMat& d, std::vector<double>* obstructions = nullptr);

// Rank of the chart differential image at (I, D): the vectors
// (mu_i - mu_j) sym(i,j) together with the X_alpha block.
int chart_differential_rank(const FMat& d);

}  // namespace austere
