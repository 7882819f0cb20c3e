#include "austere/trace_calculus.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "austere/eigensolve.hpp"

namespace austere {

namespace {

void require_sphere_point(const FMat& a, double atol, const char* where) {
  if (std::abs(a.norm() - 1.0) > atol)
    throw std::invalid_argument(std::string(where) + ": point is not unit norm");
  if (std::abs(a.rtrace()) > atol)
    throw std::invalid_argument(std::string(where) + ": point is not traceless");
}

void require_tangent(const FMat& a, const FMat& x, double atol, const char* where) {
  if (std::abs(frobenius_inner(a, x)) > atol * (1.0 + x.norm()))
    throw std::invalid_argument(std::string(where) + ": vector is not tangent to the sphere");
  if (std::abs(x.rtrace()) > atol * (1.0 + x.norm()))
    throw std::invalid_argument(std::string(where) + ": vector is not traceless");
}

}  // namespace

double trace_power(const FMat& a, int k) {
  if (k < 1) throw std::invalid_argument("trace_power requires k >= 1");
  const FMat ak = a.pow(k);
  const Quaternion t = ak.trace();
  // Hermitian powers have real trace; anything else indicates a bad input.
  const double imag = std::sqrt(t.x * t.x + t.y * t.y + t.z * t.z);
  if (imag > 1e-8 * (1.0 + std::abs(t.w)))
    throw std::invalid_argument("trace_power: non-real trace (input not Hermitian?)");
  return t.w;
}

GradientReport grad_sphere(const FMat& a, int k, double atol) {
  require_sphere_point(a, atol, "grad_sphere");
  const int n = a.n();
  GradientReport r;
  r.k = k;
  r.at = a;
  const FMat akm1 = a.pow(k - 1);
  const double tr_km1 = akm1.rtrace();
  const double tr_k = (akm1 * a).rtrace();
  const FMat id = FMat::identity(n, a.field());
  r.grad_ambient = static_cast<double>(k) * (akm1 - (tr_km1 / n) * id);
  r.grad_sphere = static_cast<double>(k) * (akm1 - tr_k * a - (tr_km1 / n) * id);
  r.norm_sphere = r.grad_sphere.norm();
  return r;
}

double hessian_sphere(const FMat& a, int k, const FMat& x, const FMat& y, double atol) {
  require_sphere_point(a, atol, "hessian_sphere");
  require_tangent(a, x, atol, "hessian_sphere");
  require_tangent(a, y, atol, "hessian_sphere");
  if (k < 2) throw std::invalid_argument("hessian_sphere requires k >= 2");
  double bilinear = 0.0;
  FMat al = FMat::identity(a.n(), a.field());  // A^l
  std::vector<FMat> powers;
  powers.reserve(static_cast<size_t>(k - 1));
  for (int l = 0; l <= k - 2; ++l) {
    powers.push_back(al);
    al = al * a;
  }
  for (int l = 0; l <= k - 2; ++l)
    bilinear += frobenius_inner(x * powers[static_cast<size_t>(l)],
                                powers[static_cast<size_t>(k - 2 - l)] * y);
  const double tr_k = trace_power(a, k);
  return k * bilinear - k * tr_k * frobenius_inner(x, y);
}

std::vector<double> phi_map(const FMat& a, double atol) {
  require_sphere_point(a, atol, "phi_map");
  const int p = (a.n() - 1) / 2;
  std::vector<double> out;
  out.reserve(static_cast<size_t>(p));
  for (int alpha = 1; alpha <= p; ++alpha) out.push_back(trace_power(a, 2 * alpha + 1));
  return out;
}

RegularityVerdict gram_regularity(const FMat& a, double phi_tol) {
  RegularityVerdict v;
  v.at = a;
  v.phi_values = phi_map(a);
  for (double f : v.phi_values)
    if (std::abs(f) > phi_tol)
      throw std::invalid_argument("gram_regularity: point is not in the zero level set");
  const int p = (a.n() - 1) / 2;
  v.lambdas = balanced_normal_form(a, std::max(phi_tol, 1e-8)).lambdas;

  double scale = 1.0;
  if (p == 0) {
    v.gram_det = 1.0;  // empty map: every sphere point is regular
    v.threshold = 0.0;
    v.is_regular = true;
    return v;
  }
  std::vector<FMat> grads;
  double rho_prod2 = 1.0;
  for (int alpha = 1; alpha <= p; ++alpha) {
    GradientReport g = grad_sphere(a, 2 * alpha + 1, std::max(phi_tol, 1e-8));
    scale = std::max(scale, g.norm_sphere);
    rho_prod2 *= g.norm_sphere * g.norm_sphere;
    grads.push_back(std::move(g.grad_sphere));
  }
  Eigen::MatrixXd gram(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      gram(i, j) = frobenius_inner(grads[static_cast<size_t>(i)], grads[static_cast<size_t>(j)]);
  v.gram_det = gram.determinant();
  // Hadamard bound |G| <= prod rho_a^2 makes this the scale-correct cut.
  v.threshold = 1e-8 * rho_prod2;
  v.is_regular = std::abs(v.gram_det) > v.threshold;

  // Cross-check: regular iff the balanced eigenvalues are pairwise distinct.
  // The Gram determinant vanishes quadratically in each eigenvalue gap, so
  // the two bands are calibrated separately and only truly impossible
  // combinations raise the diagnostic.
  double min_gap = std::numeric_limits<double>::infinity();
  double max_lam = 0.0;
  for (size_t i = 0; i < v.lambdas.size(); ++i) {
    max_lam = std::max(max_lam, std::abs(v.lambdas[i]));
    for (size_t j = i + 1; j < v.lambdas.size(); ++j)
      min_gap = std::min(min_gap, std::abs(v.lambdas[i] - v.lambdas[j]));
  }
  v.lambda_distinct = min_gap > 1e-6;
  if (min_gap < 1e-7 && std::abs(v.gram_det) > 100 * v.threshold)
    throw std::runtime_error("gram_regularity: criteria disagree (ill-conditioned point)");
  if (min_gap > 1e-2 * (1.0 + max_lam) && p == 1 && std::abs(v.gram_det) < 1e-4 * v.threshold)
    throw std::runtime_error("gram_regularity: criteria disagree (ill-conditioned point)");
  const bool decisive_regular = v.lambda_distinct && std::abs(v.gram_det) > 10 * v.threshold;
  const bool decisive_critical = min_gap < 1e-7 && std::abs(v.gram_det) <= 0.1 * v.threshold;
  v.indeterminate = !(decisive_regular || decisive_critical);
  return v;
}

}  // namespace austere
