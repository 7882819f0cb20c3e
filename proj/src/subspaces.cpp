#include "austere/subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "austere/c4_geometry.hpp"
#include "austere/parallel.hpp"
#include "austere/sampling.hpp"
#include "austere/submanifold.hpp"

namespace austere {

namespace {

RatMatrix combine(const SubspaceSpec& spec, const std::vector<long>& coeffs) {
  RatMatrix m(spec.n);
  for (size_t b = 0; b < spec.basis.size(); ++b) {
    if (coeffs[b] == 0) continue;
    m += Rat(coeffs[b]) * spec.basis[b];
  }
  return m;
}

void check_spec(const SubspaceSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("SubspaceSpec: empty matrix size");
  for (const RatMatrix& b : spec.basis) {
    if (b.n() != spec.n) throw std::invalid_argument("SubspaceSpec: basis size mismatch");
    if (!b.is_symmetric()) throw std::invalid_argument("SubspaceSpec: basis element not symmetric");
  }
}

// All coefficient vectors in {0..n}^dim, in odometer order.
bool next_grid_point(std::vector<long>& coeffs, long top) {
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < top) {
      ++coeffs[i];
      std::fill(coeffs.begin(), coeffs.begin() + static_cast<long>(i), 0L);
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_austere_exact(const RatMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("is_austere_exact: symmetric input required");
  const int n = a.n();
  RatMatrix power = a;          // A^1
  const RatMatrix square = a * a;
  for (int k = 0; 2 * k + 1 <= n; ++k) {
    if (k > 0) power = power * square;
    if (power.trace() != 0) return false;
  }
  return true;
}

SubspaceVerdict is_austere_subspace(const SubspaceSpec& spec, long trials, std::uint64_t seed,
                                    int threads) {
  check_spec(spec);
  if (trials < 1) throw std::invalid_argument("is_austere_subspace: trials >= 1");
  SubspaceVerdict out;
  const int dim = spec.dim();
  if (dim == 0) {
    out.trials_run = 0;
    return out;  // the zero subspace is austere
  }
  const long chunk = 256;
  std::vector<signed char> ok(static_cast<size_t>(std::min(chunk, trials)), 1);
  for (long base = 0; base < trials && out.austere; base += chunk) {
    const long count = std::min(chunk, trials - base);
    parallel_for(
        count,
        [&](std::int64_t t) {
          Rng rng(trial_seed(seed, static_cast<std::uint64_t>(base + t)));
          std::vector<long> coeffs(static_cast<size_t>(dim));
          for (auto& c : coeffs) c = rng.uniform_int(-spec.n, spec.n);
          ok[static_cast<size_t>(t)] = is_austere_exact(combine(spec, coeffs)) ? 1 : 0;
        },
        threads);
    for (long t = 0; t < count; ++t) {
      ++out.trials_run;
      if (!ok[static_cast<size_t>(t)]) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(base + t)));
        std::vector<long> coeffs(static_cast<size_t>(dim));
        for (auto& c : coeffs) c = rng.uniform_int(-spec.n, spec.n);
        out.austere = false;
        out.witness = combine(spec, coeffs);
        out.witness_coefficients = coeffs;
        break;
      }
    }
  }
  return out;
}

SubspaceVerdict is_austere_subspace_grid(const SubspaceSpec& spec) {
  check_spec(spec);
  if (spec.dim() > 4) throw std::invalid_argument("grid mode supports dim <= 4 only");
  SubspaceVerdict out;
  std::vector<long> coeffs(static_cast<size_t>(spec.dim()), 0);
  do {
    ++out.trials_run;
    if (!is_austere_exact(combine(spec, coeffs))) {
      out.austere = false;
      out.witness = combine(spec, coeffs);
      out.witness_coefficients = coeffs;
      return out;
    }
  } while (next_grid_point(coeffs, spec.n));
  return out;
}

SubspaceSpec bryant_subspace(BryantFamily family, int n, const BryantParams& params) {
  if (n < 2) throw std::invalid_argument("bryant_subspace: n >= 2");
  const int p = (n - 1) / 2;
  const bool even = (n % 2 == 0);
  const int half = even ? n / 2 : p;  // block size of the paired constructions
  SubspaceSpec spec;
  spec.n = n;
  switch (family) {
    case BryantFamily::PairedBlock: {
      // [[m1, m2], [m2, -m1]] over symmetric m1, m2 (odd n: zero border).
      for (int i = 0; i < half; ++i)
        for (int j = i; j < half; ++j) {
          RatMatrix m1(n);
          m1.at(i, j) = m1.at(j, i) = 1;
          m1.at(half + i, half + j) = m1.at(half + j, half + i) = -1;
          spec.basis.push_back(m1);
          RatMatrix m2(n);
          m2.at(i, half + j) = m2.at(half + j, i) = 1;
          if (i != j) {
            m2.at(j, half + i) = m2.at(half + i, j) = 1;
          }
          spec.basis.push_back(m2);
        }
      break;
    }
    case BryantFamily::OffDiagonalBlock: {
      // k and n-k give the same family; k = n/2 is austere too (it sits
      // inside the lambda-block family), so accept the whole range.
      const int k = params.k;
      if (k < 1 || 2 * k > n)
        throw std::invalid_argument("bryant_subspace: block family needs 1 <= k <= n/2");
      for (int i = 0; i < k; ++i)
        for (int j = k; j < n; ++j) {
          RatMatrix m(n);
          m.at(i, j) = m.at(j, i) = 1;
          spec.basis.push_back(m);
        }
      break;
    }
    case BryantFamily::LambdaBlock: {
      // [[lambda I, m], [m^t, -lambda I]] over all m (odd n: zero border).
      for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) {
          RatMatrix m(n);
          m.at(i, half + j) = m.at(half + j, i) = 1;
          spec.basis.push_back(m);
        }
      RatMatrix lam(n);
      for (int i = 0; i < half; ++i) {
        lam.at(i, i) = 1;
        lam.at(half + i, half + i) = -1;
      }
      spec.basis.push_back(lam);
      break;
    }
    case BryantFamily::Table2Special: {
      if (n != 4) throw std::invalid_argument("bryant_subspace: the constrained family is n = 4");
      if (params.lambdas.size() != 3)
        throw std::invalid_argument("bryant_subspace: three lambda parameters required");
      const Rat &l1 = params.lambdas[0], &l2 = params.lambdas[1], &l3 = params.lambdas[2];
      if (!(l1 >= l2 && l2 >= 0 && 0 >= l3))
        throw std::invalid_argument("bryant_subspace: need l1 >= l2 >= 0 >= l3");
      if (l1 * l2 * l3 + l1 + l2 + l3 != 0)
        throw std::invalid_argument("bryant_subspace: cubic constraint violated");
      const Rat ls[3] = {l1, l2, l3};
      // d/dx_r of the displayed matrix: entry (0, r+1) is 1 and the
      // complementary pair carries lambda_{r+1}.
      const int pair_row[3] = {2, 1, 1};
      const int pair_col[3] = {3, 3, 2};
      for (int r = 0; r < 3; ++r) {
        RatMatrix m(4);
        m.at(0, r + 1) = m.at(r + 1, 0) = 1;
        m.at(pair_row[r], pair_col[r]) = m.at(pair_col[r], pair_row[r]) = ls[r];
        spec.basis.push_back(m);
      }
      break;
    }
  }
  return spec;
}

int bryant_dimension(BryantFamily family, int n, const BryantParams& params) {
  const int p = (n - 1) / 2;
  const bool even = (n % 2 == 0);
  switch (family) {
    case BryantFamily::PairedBlock: return even ? (p + 1) * (p + 2) : p * (p + 1);
    case BryantFamily::OffDiagonalBlock: return params.k * (n - params.k);
    case BryantFamily::LambdaBlock: return even ? (p + 1) * (p + 1) + 1 : p * p + 1;
    case BryantFamily::Table2Special: return 3;
  }
  throw std::logic_error("bryant_dimension");
}

int witt_bound(int n, int r, int s) {
  if (r < 0 || s < 0 || r + s > n) throw std::invalid_argument("witt_bound: invalid signature");
  return (n - r - s) + std::min(r, s);
}

std::optional<Eigen::MatrixXd> isotropic_search(const Eigen::MatrixXd& form, int target_dim,
                                                long budget, std::uint64_t seed) {
  const int d = static_cast<int>(form.rows());
  if (form.cols() != d || (form - form.transpose()).norm() > 1e-12 * (1 + form.norm()))
    throw std::invalid_argument("isotropic_search: symmetric form required");
  if (target_dim < 1 || target_dim > d) return std::nullopt;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  const double zero_tol = 1e-10 * scale;

  std::vector<int> kernel, pos, neg;
  for (int i = 0; i < d; ++i) {
    const double v = es.eigenvalues()[i];
    if (std::abs(v) <= zero_tol)
      kernel.push_back(i);
    else if (v > 0)
      pos.push_back(i);
    else
      neg.push_back(i);
  }
  const int bound = static_cast<int>(kernel.size()) +
                    static_cast<int>(std::min(pos.size(), neg.size()));

  auto isotropy_defect = [&](const Eigen::MatrixXd& w) {
    return (w.transpose() * form * w).cwiseAbs().maxCoeff();
  };

  if (target_dim <= bound) {
    // kernel plus hyperbolic pairs built from positive/negative eigenvectors
    Eigen::MatrixXd w(d, target_dim);
    int col = 0;
    for (size_t i = 0; i < kernel.size() && col < target_dim; ++i)
      w.col(col++) = es.eigenvectors().col(kernel[i]);
    for (size_t i = 0; col < target_dim; ++i) {
      const double a = es.eigenvalues()[pos[i]];
      const double b = -es.eigenvalues()[neg[i]];
      Eigen::VectorXd v = es.eigenvectors().col(pos[i]) / std::sqrt(a) +
                          es.eigenvectors().col(neg[i]) / std::sqrt(b);
      w.col(col++) = v.normalized();
    }
    if (isotropy_defect(w) <= 1e-10 * scale) return w;
    return std::nullopt;
  }

  // Above the bound: random attempts can only fail, but run them anyway so a
  // bound violation would be caught rather than assumed away.
  Rng rng(seed);
  for (long attempt = 0; attempt < budget; ++attempt) {
    Eigen::MatrixXd g(d, target_dim);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < target_dim; ++j) g(i, j) = rng.gaussian();
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ() *
                              Eigen::MatrixXd::Identity(d, target_dim);
    if (isotropy_defect(q) <= 1e-10 * scale) return q;
  }
  return std::nullopt;
}

int dimest_bound(int n) {
  if (n < 3) throw std::invalid_argument("dimest_bound: n >= 3");
  const int p = (n - 1) / 2;
  return (n % 2 == 1) ? p * p + 2 * p : p * p + 3 * p + 2;
}

DimestReport verify_dimest_ingredients(int n, long trials, std::uint64_t seed, int threads) {
  if (n < 3 || n > 8) throw std::invalid_argument("verify_dimest_ingredients: 3 <= n <= 8");
  DimestReport rep;
  rep.n = n;
  rep.trials = trials;
  const int p = (n - 1) / 2;
  rep.expected_nullity = (n % 2 == 1) ? 2 * p - 1 : 2 * p + 1;
  rep.expected_index = (n % 2 == 1) ? p * p : p * p + p;
  std::vector<signed char> ok(static_cast<size_t>(trials), 0);
  parallel_for(
      trials,
      [&](std::int64_t t) {
        const FMat a = sample_point(n, Field::Real, Region::B,
                                    trial_seed(seed, static_cast<std::uint64_t>(t)));
        const FormSignature sig = second_form_signature(frame_point(a), 1);
        ok[static_cast<size_t>(t)] = (sig.nullity == rep.expected_nullity &&
                                      sig.pos_index == rep.expected_index &&
                                      sig.neg_index == rep.expected_index)
                                         ? 1
                                         : 0;
      },
      threads);
  for (signed char o : ok)
    if (!o) ++rep.mismatches;
  return rep;
}

SubspaceSpec c4_conjugated_subspace_exact(Field f) {
  const std::vector<Eigen::MatrixXi> reps = c4_rep_int(f);
  const Eigen::MatrixXi q = c4_conjugator_int(f);
  const int d = static_cast<int>(q.rows());
  SubspaceSpec spec;
  spec.n = d;
  const Rat half(1, 2);
  for (const Eigen::MatrixXi& rep : reps) {
    const Eigen::MatrixXi conj = q.transpose() * rep * q;  // = 2 * Q^t (rep) Q for unit Q
    RatMatrix m(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = half * Rat(conj(i, j));
    spec.basis.push_back(m);
  }
  return spec;
}

}  // namespace austere
