#include "austere/dupin4.hpp"

#include <cmath>
#include <stdexcept>

#include "austere/basis.hpp"
#include "austere/eigensolve.hpp"
#include "austere/field.hpp"
#include "austere/linalg.hpp"
#include "austere/sampling.hpp"
#include "austere/trace_calculus.hpp"

namespace austere {

namespace {

constexpr std::pair<int, int> kCirclePairs[4] = {{1, 3}, {2, 4}, {1, 4}, {2, 3}};

bool valid_circle_pair(std::pair<int, int> p) {
  for (const auto& q : kCirclePairs)
    if (q == p) return true;
  return false;
}

void require_pair(std::pair<int, int> p, int n) {
  if (!(1 <= p.first && p.first < p.second && p.second <= n))
    throw std::invalid_argument("index pair out of range");
}

// exp(t * skew(i,j)) is the plane rotation by t/sqrt(2) in the (i,j) plane.
FMat rotation_exp(int n, Field f, std::pair<int, int> pair, double t) {
  FMat r = FMat::identity(n, f);
  const double th = t / std::sqrt(2.0);
  r.at(pair.first - 1, pair.first - 1) = Quaternion(std::cos(th));
  r.at(pair.second - 1, pair.second - 1) = Quaternion(std::cos(th));
  r.at(pair.first - 1, pair.second - 1) = Quaternion(std::sin(th));
  r.at(pair.second - 1, pair.first - 1) = Quaternion(-std::sin(th));
  return r;
}

FMat xi1_of(const FMat& a) {
  const GradientReport g = grad_sphere(a, 3);
  return g.grad_sphere * (1.0 / g.norm_sphere);
}

// Tangent projection at a diagonal regular point of the n = 4 slice.
FMat tangent_project(const FMat& d, const FMat& v) {
  const FMat xi = xi1_of(d);
  FMat out = v;
  const double tr = out.rtrace() / d.n();
  for (int i = 0; i < d.n(); ++i) out.at(i, i) -= Quaternion(tr);
  out -= frobenius_inner(out, d) * d;
  out -= frobenius_inner(out, xi) * xi;
  return out;
}

// Covariant derivative (nabla_{Y_ij} Y_kl)(D) = (sym(kl) skew(ij) - skew(ij) sym(kl))^T / (mu_i - mu_j).
FMat nabla_y(const FMat& d, std::pair<int, int> ij, std::pair<int, int> kl) {
  const int n = d.n();
  const double mu_i = d.at(ij.first - 1, ij.first - 1).w;
  const double mu_j = d.at(ij.second - 1, ij.second - 1).w;
  const FMat sym_kl = basis_sym(n, Field::Real, kl.first, kl.second);
  const FMat skew_ij = basis_skew(n, Field::Real, ij.first, ij.second);
  const FMat comm = sym_kl * skew_ij - skew_ij * sym_kl;
  return tangent_project(d, comm * (1.0 / (mu_i - mu_j)));
}

}  // namespace

KappaProfile kappa_profile(const FMat& a, double tol) {
  if (a.n() != 4) throw std::invalid_argument("kappa_profile requires n = 4");
  const BalancedForm bf = balanced_normal_form(a, tol);
  KappaProfile kp;
  kp.lambda1 = bf.lambdas[0];
  kp.lambda2 = bf.lambdas[1];
  if (kp.lambda2 < 1e-8 || kp.lambda1 - kp.lambda2 < 1e-8)
    throw std::invalid_argument("kappa_profile: point is not in the principal-orbit set");
  kp.rho1 = 3.0 * std::sqrt(trace_power(a, 4) - 0.25);
  const double k1 = 3.0 * (kp.lambda1 + kp.lambda2) / kp.rho1;
  const double k3 = 3.0 * (kp.lambda1 - kp.lambda2) / kp.rho1;
  const int m = real_dim(a.field());
  kp.kappas = {k1, -k1, k3, -k3, 0.0};
  kp.multiplicities = {m, m, m, m, 2 * m + 1};
  return kp;
}

std::pair<int, int> principal_direction_pair(int kappa_index) {
  switch (kappa_index) {
    case 1: return {2, 4};
    case 2: return {1, 3};
    case 3: return {2, 3};
    case 4: return {1, 4};
  }
  throw std::invalid_argument("principal_direction_pair: index must be 1..4");
}

FMat curvature_circle(const FMat& p, const FMat& d, std::pair<int, int> pair, double t) {
  if (!valid_circle_pair(pair))
    throw std::invalid_argument("curvature_circle: pair must be (1,3), (2,4), (1,4) or (2,3)");
  const FMat q = rotation_exp(d.n(), d.field(), pair, t) * p;
  return d.conjugated_by(q);
}

double lie_inner(const LieVector& u, const LieVector& v) {
  return -u.a * v.a + frobenius_inner(u.b, v.b) - u.c * v.c;
}

LegendreLift legendre_lift(const FMat& a) {
  LegendreLift lift;
  lift.profile = kappa_profile(a);
  lift.z1 = LieVector{1.0, a, 0.0};
  lift.zlast = LieVector{0.0, xi1_of(a), 1.0};
  for (int i = 0; i < 5; ++i) {
    const double k = lift.profile.kappas[static_cast<size_t>(i)];
    lift.k[static_cast<size_t>(i)] =
        LieVector{k * lift.z1.a + lift.zlast.a, k * lift.z1.b + lift.zlast.b, k * lift.z1.c + lift.zlast.c};
  }
  return lift;
}

int curvature_sphere_span(int i, Field f, int n_samples, std::uint64_t seed, double* gap_ratio) {
  if (i < 1 || i > 5) throw std::invalid_argument("curvature_sphere_span: i must be 1..5");
  const int n_amb = ambient_dim(4, f);
  if (n_samples < n_amb + 2)
    throw std::invalid_argument("curvature_sphere_span: need at least N+2 samples");
  const int cols = 2 + 4 * 16;
  Eigen::MatrixXd rows(n_samples, cols);
  for (int s = 0; s < n_samples; ++s) {
    const FMat a = sample_point(4, f, Region::BTilde, trial_seed(seed, static_cast<std::uint64_t>(s)));
    const LegendreLift lift = legendre_lift(a);
    const LieVector& k = lift.k[static_cast<size_t>(i - 1)];
    rows(s, 0) = k.a;
    rows.block(s, 1, 1, 64) = flatten(k.b).transpose();
    rows(s, cols - 1) = k.c;
  }
  double gap = 0.0;
  const int rank = numerical_rank(rows, 1e-8, &gap);
  if (gap_ratio)
    *gap_ratio = gap;
  else if (gap < 1e6)
    throw std::runtime_error("curvature_sphere_span: rank not decisive (singular-value gap " +
                             std::to_string(gap) + ")");
  return rank;
}

ChartPoint chart_inverse(const FMat& b, const FMat& p_ref) {
  if (b.n() != 4 || b.field() != Field::Real)
    throw std::invalid_argument("chart_inverse: defined on the real n = 4 slice");
  const HermEigen e = hermitian_eigen(b);
  // descending eigenvalues (a1, a2, a3, a4) -> ordered slots (a1, a4, a2, a3)
  const int slot_src[4] = {0, 3, 1, 2};
  ChartPoint cp;
  cp.d0 = FMat(4, Field::Real);
  FMat u(4, Field::Real);  // columns are eigenvectors in slot order
  for (int c = 0; c < 4; ++c) {
    const int s = slot_src[c];
    cp.d0.at(c, c) = Quaternion(e.values[static_cast<size_t>(s)]);
    for (int r = 0; r < 4; ++r) u.at(r, c) = e.P.at(r, s);
  }
  // B = U D0 U^T = P* D0 P with P = U^T; align the rows of P (columns of U)
  // against the reference for a continuous selection.
  const FMat u_ref = p_ref.transpose();
  for (int c = 0; c < 4; ++c) {
    double dot = 0.0;
    for (int r = 0; r < 4; ++r) dot += u.at(r, c).w * u_ref.at(r, c).w;
    if (dot < 0.0)
      for (int r = 0; r < 4; ++r) u.at(r, c) = -u.at(r, c);
  }
  cp.p = u.transpose();
  return cp;
}

FMat y_field(const FMat& b, std::pair<int, int> pair, const FMat& p_ref) {
  require_pair(pair, 4);
  const ChartPoint cp = chart_inverse(b, p_ref);
  return basis_sym(4, Field::Real, pair.first, pair.second).conjugated_by(cp.p);
}

FMat flow_y(const FMat& b, std::pair<int, int> pair, double t, const FMat& p_ref) {
  require_pair(pair, 4);
  const ChartPoint cp = chart_inverse(b, p_ref);
  const double mu_i = cp.d0.at(pair.first - 1, pair.first - 1).w;
  const double mu_j = cp.d0.at(pair.second - 1, pair.second - 1).w;
  const FMat q = rotation_exp(4, Field::Real, pair, t / (mu_i - mu_j)) * cp.p;
  return cp.d0.conjugated_by(q);
}

FMat bracket_fields(const FMat& d, std::pair<int, int> pair1, std::pair<int, int> pair2) {
  require_pair(pair1, d.n());
  require_pair(pair2, d.n());
  if (pair1 == pair2) return FMat::zero(d.n(), Field::Real);
  return nabla_y(d, pair1, pair2) - nabla_y(d, pair2, pair1);
}

FMat bracket_fields_fd(const FMat& d, std::pair<int, int> pair1, std::pair<int, int> pair2,
                       double h) {
  const FMat id = FMat::identity(4, Field::Real);
  auto loop = [&](double step) {
    FMat x = flow_y(d, pair1, step, id);
    x = flow_y(x, pair2, step, id);
    x = flow_y(x, pair1, -step, id);
    x = flow_y(x, pair2, -step, id);
    return x;
  };
  // two-sided loop defect kills the cubic term
  const FMat fwd = loop(h);
  const FMat bwd = loop(-h);
  return (fwd + bwd - 2.0 * d) * (1.0 / (2.0 * h * h));
}

bool weak_irreducibility_check(const FMat& d, std::vector<double>* obstructions) {
  if (d.n() != 4 || d.field() != Field::Real)
    throw std::invalid_argument("weak_irreducibility_check: defined on the real n = 4 slice");
  struct Case {
    std::pair<int, int> f1, f2, target;
  };
  // Bracket of two conullity fields against the principal direction it must hit.
  const Case cases[5] = {
      {{1, 2}, {2, 3}, {1, 3}},
      {{1, 2}, {1, 4}, {2, 4}},
      {{1, 2}, {2, 4}, {1, 4}},
      {{1, 2}, {1, 3}, {2, 3}},
      {{1, 3}, {1, 4}, {3, 4}},
  };
  bool ok = true;
  if (obstructions) obstructions->clear();
  for (const Case& c : cases) {
    const FMat br = bracket_fields(d, c.f1, c.f2);
    const FMat target = basis_sym(4, Field::Real, c.target.first, c.target.second);
    const double comp = frobenius_inner(br, target);
    const double off = (br - comp * target).norm();
    if (off > 1e-9 * (1.0 + br.norm())) ok = false;
    if (std::abs(comp) < 1e-6) ok = false;
    if (obstructions) obstructions->push_back(std::abs(comp));
  }
  return ok;
}

int chart_differential_rank(const FMat& d) {
  const int n = d.n();
  if (n % 2 != 0) throw std::invalid_argument("chart_differential_rank: even n only");
  const int p = (n - 1) / 2;
  std::vector<FMat> vecs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const double mu_i = d.at(i - 1, i - 1).w;
      const double mu_j = d.at(j - 1, j - 1).w;
      vecs.push_back((mu_i - mu_j) * basis_sym(n, d.field(), i, j));
    }
  for (int alpha = 1; alpha <= p; ++alpha) {
    const FMat ap = d.pow(2 * alpha + 1);
    vecs.push_back(ap - (ap * d).rtrace() * d);
  }
  Eigen::MatrixXd rows(static_cast<int>(vecs.size()), 4 * n * n);
  for (size_t i = 0; i < vecs.size(); ++i) rows.row(static_cast<int>(i)) = flatten(vecs[i]).transpose();
  return numerical_rank(rows);
}

}  // namespace austere
