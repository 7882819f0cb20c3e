#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "austere/matrix.hpp"

namespace austere {

// Deterministic random stream. Gaussians come from an explicit Box-Muller on
// raw mt19937_64 output so results depend only on the seed, not on any
// library distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian();

  // Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stable per-trial seed derivation, so sweeps can run in any order or in
// parallel without changing results.
std::uint64_t trial_seed(std::uint64_t root_seed, std::uint64_t trial_index);

enum class Region { BTilde, B, C4 };

Quaternion random_scalar(Field f, Rng& rng);

// Entrywise Gaussian matrix over F, orthonormalized (Haar for R and C).
FMat random_unitary(int n, Field f, Rng& rng);

// Random traceless Hermitian matrix, entries O(1).
FMat random_hermitian_traceless(int n, Field f, Rng& rng);

// Random unit tangent vector to the sphere at a unit A (traceless Hermitian,
// orthogonal to A).
FMat random_sphere_tangent(const FMat& a, Rng& rng);

// Balanced diagonal from the admissible set of the region, unit norm, with a
// minimum relative eigenvalue gap so sampled points stay well inside the
// regular set.
std::vector<double> sample_balanced_diagonal(int n, Region region, Rng& rng);

// P* D P for Haar-like random P and admissible random D; deterministic per seed.
FMat sample_point(int n, Field f, Region region, std::uint64_t seed);

}  // namespace austere
