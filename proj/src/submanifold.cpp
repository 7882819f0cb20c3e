#include "austere/submanifold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "austere/basis.hpp"
#include "austere/eigensolve.hpp"
#include "austere/field.hpp"
#include "austere/linalg.hpp"
#include "austere/trace_calculus.hpp"

namespace austere {

namespace {

constexpr double kKernelTol = 1e-8;

// X_alpha at a zero-level point: A^{2a+1} - (tr A^{2a+2}) A.
FMat x_alpha(const FMat& a, int alpha) {
  const FMat ap = a.pow(2 * alpha + 1);
  return ap - (ap * a).rtrace() * a;
}

}  // namespace

FramedPoint frame_point(const FMat& a, double tol) {
  const RegularityVerdict verdict = gram_regularity(a, tol);
  // The determinant criterion underflows for p >= 3 at modest eigenvalue
  // gaps; a decisively distinct spectrum is an equivalent admission ticket.
  if (!verdict.is_regular && !(verdict.indeterminate && verdict.lambda_distinct))
    throw std::invalid_argument("frame_point: critical point of the zero level set");

  FramedPoint fp;
  fp.a = a;
  fp.conditioning_warning = verdict.indeterminate;
  const BalancedForm bf = balanced_normal_form(a, tol);
  fp.p_unitary = bf.P;
  fp.d = bf.D;
  fp.lambdas = bf.lambdas;

  const int n = a.n();
  const Field f = a.field();
  const int p = (n - 1) / 2;
  const bool even = (n % 2 == 0);
  if (even)
    fp.case_tag = (std::abs(fp.lambdas.back()) <= kKernelTol) ? FrameCase::EvenKernel
                                                              : FrameCase::EvenNonzero;
  else
    fp.case_tag = FrameCase::OddN;

  // Normal frame: xi_alpha = grad f_{2a+1} / rho_alpha at A itself.
  for (int alpha = 1; alpha <= p; ++alpha) {
    GradientReport g = grad_sphere(a, 2 * alpha + 1, std::max(tol, 1e-8));
    fp.rho.push_back(g.norm_sphere);
    fp.normal_frame.push_back(g.grad_sphere * (1.0 / g.norm_sphere));
  }

  // Tangent frame at the diagonal representative, conjugated back by P.
  // Off-diagonal block: sym(i,j) plus the imaginary families for C and H.
  std::vector<FMat> frame_d;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) frame_d.push_back(basis_sym(n, f, i, j));
  const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  const int extra = (f == Field::Real) ? 0 : (f == Field::Complex ? 1 : 3);
  for (int u = 0; u < extra; ++u)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) frame_d.push_back(basis_q_skew(n, f, i, j, units[u]));

  // Diagonal block: X_alpha (count depends on the case), plus the corner
  // vector in the even-kernel case. Orthonormalized among itself.
  std::vector<FMat> diag_block;
  const int n_x = (fp.case_tag == FrameCase::EvenNonzero) ? p : p - 1;
  for (int alpha = 1; alpha <= n_x; ++alpha) diag_block.push_back(x_alpha(fp.d, alpha));
  if (fp.case_tag == FrameCase::EvenKernel) {
    FMat corner(n, f);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    corner.at(n - 2, n - 2) = Quaternion(inv_sqrt2);
    corner.at(n - 1, n - 1) = Quaternion(-inv_sqrt2);
    diag_block.push_back(corner);
  }
  if (!diag_block.empty()) {
    const double cond = orthonormalize(diag_block);
    if (cond > 1e8) throw std::runtime_error("frame_point: near-degenerate diagonal block");
  }
  for (auto& m : diag_block) frame_d.push_back(std::move(m));

  // P* A P = D, so the isometry moving frame vectors from D to A is
  // T -> P T P*.
  const FMat p_inv = fp.p_unitary.conj_transpose();
  fp.tangent_frame.reserve(frame_d.size());
  for (const auto& t : frame_d) fp.tangent_frame.push_back(t.conjugated_by(p_inv));

  const int expected = ambient_dim(n, f) - p - 1;
  if (fp.tangent_dim() != expected)
    throw std::runtime_error("frame_point: tangent frame has wrong dimension");
  return fp;
}

Eigen::MatrixXd shape_operator(const FramedPoint& fp, int alpha) {
  if (alpha < 1 || alpha > fp.p())
    throw std::invalid_argument("shape_operator: alpha out of range");
  const int dim = fp.tangent_dim();
  const double coef = -(2.0 * alpha + 1.0) / fp.rho[static_cast<size_t>(alpha - 1)];
  // Powers A^0 .. A^{2a-1}
  std::vector<FMat> pow;
  pow.reserve(static_cast<size_t>(2 * alpha));
  FMat acc = FMat::identity(fp.a.n(), fp.a.field());
  for (int r = 0; r < 2 * alpha; ++r) {
    pow.push_back(acc);
    acc = acc * fp.a;
  }
  // Precompute T_b A^r once per (b, r).
  std::vector<std::vector<FMat>> right(static_cast<size_t>(dim));
  for (int b = 0; b < dim; ++b) {
    right[static_cast<size_t>(b)].reserve(pow.size());
    for (int r = 0; r < 2 * alpha; ++r)
      right[static_cast<size_t>(b)].push_back(pow[static_cast<size_t>(r)] * fp.tangent_frame[static_cast<size_t>(b)]);
  }
  Eigen::MatrixXd s(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      double acc_ij = 0.0;
      for (int r = 0; r < 2 * alpha; ++r)
        acc_ij += frobenius_inner(fp.tangent_frame[static_cast<size_t>(i)] * pow[static_cast<size_t>(r)],
                                  right[static_cast<size_t>(j)][static_cast<size_t>(2 * alpha - 1 - r)]);
      s(i, j) = coef * acc_ij;
      s(j, i) = s(i, j);
    }
  return s;
}

PrincipalSpectrum cluster_spectrum(const Eigen::VectorXd& eigenvalues, int alpha) {
  PrincipalSpectrum ps;
  ps.alpha = alpha;
  ps.raw.assign(eigenvalues.data(), eigenvalues.data() + eigenvalues.size());
  std::sort(ps.raw.begin(), ps.raw.end(), std::greater<>());
  if (ps.raw.empty()) return ps;

  double radius = 0.0;
  for (double v : ps.raw) radius = std::max(radius, std::abs(v));
  const double tol = 1e-6 * (radius + 1.0);

  size_t i = 0;
  while (i < ps.raw.size()) {
    size_t j = i;
    double sum = 0.0;
    while (j < ps.raw.size() && std::abs(ps.raw[j] - ps.raw[i]) <= tol) sum += ps.raw[j++];
    ps.clusters.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
    i = j;
  }
  for (size_t c = 0; c + 1 < ps.clusters.size(); ++c)
    if (ps.clusters[c].first - ps.clusters[c + 1].first < 10 * tol)
      throw std::runtime_error("principal_spectrum: cluster gap below the safety margin");

  // Negation pairing: zero clusters are free, others must pair off exactly.
  ps.austere = true;
  for (const auto& [value, mult] : ps.clusters) {
    if (std::abs(value) <= tol) continue;
    bool paired = false;
    for (const auto& [ov, om] : ps.clusters)
      if (std::abs(ov + value) <= 1e-8 * (radius + 1.0) && om == mult) paired = true;
    if (!paired) ps.austere = false;
  }
  return ps;
}

PrincipalSpectrum principal_spectrum(const FramedPoint& fp, int alpha) {
  const Eigen::MatrixXd s = shape_operator(fp, alpha);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
  return cluster_spectrum(es.eigenvalues(), alpha);
}

bool verify_flat_normal_bundle(const FramedPoint& fp, double tol, double* max_commutator) {
  double worst = 0.0;
  std::vector<Eigen::MatrixXd> ops;
  for (int alpha = 1; alpha <= fp.p(); ++alpha) ops.push_back(shape_operator(fp, alpha));
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j)
      worst = std::max(worst, (ops[i] * ops[j] - ops[j] * ops[i]).norm());
  if (max_commutator) *max_commutator = worst;
  return worst <= tol;
}

double scalar_curvature_b4(const FMat& a, double tol) {
  if (a.n() != 4) throw std::invalid_argument("scalar_curvature_b4 requires n = 4");
  const int m = real_dim(a.field());
  const double t4 = trace_power(a, 4);
  if (t4 <= 0.25 + tol)
    throw std::invalid_argument("scalar_curvature_b4: tr A^4 too close to 1/4 (critical orbit)");
  return 6.0 * m * (6.0 * m + 1.0) - 2.0 * m / (t4 - 0.25);
}

double scalar_curvature_b4_gauss(const FramedPoint& fp) {
  const int n_amb = ambient_dim(4, fp.a.field());
  const Eigen::MatrixXd s = shape_operator(fp, 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
  const double ii2 = es.eigenvalues().squaredNorm();
  return static_cast<double>((n_amb - 2) * (n_amb - 3)) - ii2;
}

FormSignature second_form_signature(const FramedPoint& fp, int alpha) {
  const PrincipalSpectrum ps = principal_spectrum(fp, alpha);
  double radius = 0.0;
  for (double v : ps.raw) radius = std::max(radius, std::abs(v));
  const double tol = 1e-6 * (radius + 1.0);
  FormSignature sig;
  for (const auto& [value, mult] : ps.clusters) {
    if (std::abs(value) <= tol)
      sig.nullity += mult;
    else if (value > 0)
      sig.pos_index += mult;
    else
      sig.neg_index += mult;
  }
  return sig;
}

int substantiality_rank(const std::vector<FMat>& samples) {
  if (samples.empty()) throw std::invalid_argument("substantiality_rank: no samples");
  const int n = samples.front().n();
  const int needed = ambient_dim(n, samples.front().field());
  if (static_cast<int>(samples.size()) < needed)
    throw std::invalid_argument("substantiality_rank: too few samples");
  Eigen::MatrixXd rows(static_cast<int>(samples.size()), 4 * n * n);
  for (size_t i = 0; i < samples.size(); ++i) rows.row(static_cast<int>(i)) = flatten(samples[i]).transpose();
  return numerical_rank(rows);
}

}  // namespace austere
