#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "austere/field.hpp"
#include "austere/rational_matrix.hpp"

namespace austere {

// A linear subspace of real symmetric matrices, given by an exact basis.
struct SubspaceSpec {
  int n = 0;
  std::vector<RatMatrix> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// tr A^{2k+1} = 0 for all 0 <= k <= floor((n-1)/2), evaluated exactly.
bool is_austere_exact(const RatMatrix& a);

struct SubspaceVerdict {
  bool austere = true;
  std::optional<RatMatrix> witness;          // failing combination, if any
  std::vector<long> witness_coefficients;    // its integer coefficients
  long trials_run = 0;
};

// Probabilistic subspace test: random integer coefficient vectors in
// {-n..n}^dim, each combination checked exactly. A false result carries a
// witness; a true result is Schwartz-Zippel confident (the trace polynomials
// have degree <= n, so each trial misses a non-austere space with probability
// at most n/(2n+1)).
SubspaceVerdict is_austere_subspace(const SubspaceSpec& spec, long trials, std::uint64_t seed,
                                    int threads = 0);

// Deterministic small-dimension mode: every coefficient point in {0..n}^dim.
// The grid determines polynomials of per-variable degree <= n, so this is a
// proof. Only for dim <= 4.
SubspaceVerdict is_austere_subspace_grid(const SubspaceSpec& spec);

enum class BryantFamily { PairedBlock, OffDiagonalBlock, LambdaBlock, Table2Special };

struct BryantParams {
  int k = 0;                    // OffDiagonalBlock only
  std::vector<Rat> lambdas;     // Table2Special only: l1 >= l2 >= 0 >= l3 with
                                // l1 l2 l3 + l1 + l2 + l3 = 0
};

SubspaceSpec bryant_subspace(BryantFamily family, int n, const BryantParams& params = {});

// Expected dimension of each family per the classification tables.
int bryant_dimension(BryantFamily family, int n, const BryantParams& params = {});

// dim W <= (n - r - s) + min(r, s) for totally isotropic W under a symmetric
// bilinear form of signature (r, s) on an n-dimensional space.
int witt_bound(int n, int r, int s);

// Search for a totally isotropic subspace of the given dimension: kernel
// first, then hyperbolic pairs from the spectral decomposition, then random
// completion attempts up to `budget`. Never returns a subspace that exceeds
// the Witt bound; columns of the result span the subspace.
std::optional<Eigen::MatrixXd> isotropic_search(const Eigen::MatrixXd& form, int target_dim,
                                                long budget, std::uint64_t seed);

// Dimension bound for austere subspaces meeting the regular set:
// p^2 + 2p for n = 2p+1, p^2 + 3p + 2 for n = 2p+2.
int dimest_bound(int n);

struct DimestReport {
  int n = 0;
  long trials = 0;
  int expected_nullity = 0;
  int expected_index = 0;
  long mismatches = 0;
  bool pass() const { return mismatches == 0; }
};

// Checks second_form_signature against the closed nullity/index formulas at
// random regular points of the real family.
DimestReport verify_dimest_ingredients(int n, long trials, std::uint64_t seed, int threads = 0);

// Exact rational basis of the conjugated shape-operator span at the critical
// orbit base point (R: 4x4, dim 4; C: 8x8, dim 6), scaled by sqrt(2) so the
// entries are rational.
SubspaceSpec c4_conjugated_subspace_exact(Field f);

}  // namespace austere
