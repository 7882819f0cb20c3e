#include "austere/eigensolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace austere {

namespace {

using Cx = std::complex<double>;

Eigen::MatrixXd to_real(const FMat& a) {
  Eigen::MatrixXd m(a.n(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) m(i, j) = a.at(i, j).w;
  return m;
}

Eigen::MatrixXcd to_complex(const FMat& a) {
  Eigen::MatrixXcd m(a.n(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) m(i, j) = Cx(a.at(i, j).w, a.at(i, j).x);
  return m;
}

// q = a + b j with a, b complex: the symplectic embedding [[a, b], [-b~, a~]].
Eigen::MatrixXcd embed_quaternionic(const FMat& a) {
  const int n = a.n();
  Eigen::MatrixXcd m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Quaternion& q = a.at(i, j);
      const Cx a1(q.w, q.x), a2(q.y, q.z);
      m(i, j) = a1;
      m(i, n + j) = a2;
      m(n + i, j) = -std::conj(a2);
      m(n + i, n + j) = std::conj(a1);
    }
  return m;
}

// Quaternionic column vector helpers (right H-module conventions).
using QVec = std::vector<Quaternion>;

Quaternion qdot(const QVec& a, const QVec& b) {
  Quaternion s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i].conj() * b[i];
  return s;
}

double qnorm(const QVec& a) {
  double s = 0.0;
  for (const auto& q : a) s += q.norm2();
  return std::sqrt(s);
}

void reject(QVec& v, const QVec& u) {
  const Quaternion c = qdot(u, v);
  for (size_t i = 0; i < v.size(); ++i) v[i] -= u[i] * c;
}

HermEigen quaternionic_eigen(const FMat& a) {
  const int n = a.n();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(embed_quaternionic(a));
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eigen: embedding solve failed");
  const auto& vals = es.eigenvalues();  // ascending, doubled
  const auto& vecs = es.eigenvectors();

  // Rebuild quaternionic eigenvectors: (u1; u2) <-> u1 - conj(u2) j, then a
  // greedy max-residual Gram-Schmidt keeps one vector per Kramers pair.
  std::vector<QVec> cand(static_cast<size_t>(2 * n), QVec(static_cast<size_t>(n)));
  for (int c = 0; c < 2 * n; ++c)
    for (int i = 0; i < n; ++i) {
      const Cx a1 = vecs(i, c);
      const Cx a2 = -std::conj(vecs(n + i, c));
      cand[static_cast<size_t>(c)][static_cast<size_t>(i)] =
          Quaternion(a1.real(), a1.imag(), a2.real(), a2.imag());
    }

  std::vector<QVec> accepted;
  std::vector<double> accepted_vals;
  std::vector<bool> used(static_cast<size_t>(2 * n), false);
  std::vector<QVec> residual = cand;
  while (static_cast<int>(accepted.size()) < n) {
    int best = -1;
    double best_norm = 0.0;
    for (int c = 0; c < 2 * n; ++c) {
      if (used[static_cast<size_t>(c)]) continue;
      const double r = qnorm(residual[static_cast<size_t>(c)]);
      if (r > best_norm) {
        best_norm = r;
        best = c;
      }
    }
    if (best < 0 || best_norm < 1e-8)
      throw std::runtime_error("hermitian_eigen: quaternionic reconstruction degenerated");
    QVec v = residual[static_cast<size_t>(best)];
    for (const auto& u : accepted) reject(v, u);  // second pass tightens orthogonality
    const double vn = qnorm(v);
    for (auto& q : v) q *= 1.0 / vn;
    used[static_cast<size_t>(best)] = true;
    // Remove the new quaternionic direction from every remaining candidate.
    for (int c = 0; c < 2 * n; ++c)
      if (!used[static_cast<size_t>(c)]) reject(residual[static_cast<size_t>(c)], v);
    accepted.push_back(std::move(v));
    accepted_vals.push_back(vals[best]);
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return accepted_vals[static_cast<size_t>(i)] > accepted_vals[static_cast<size_t>(j)];
  });

  HermEigen out;
  out.P = FMat(n, Field::Quaternion);
  out.values.resize(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    const int s = order[static_cast<size_t>(c)];
    out.values[static_cast<size_t>(c)] = accepted_vals[static_cast<size_t>(s)];
    for (int i = 0; i < n; ++i) out.P.at(i, c) = accepted[static_cast<size_t>(s)][static_cast<size_t>(i)];
  }
  return out;
}

template <typename Mat, typename Scalar>
HermEigen classical_eigen(const FMat& a, const Mat& m, Field f) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eigen: solve failed");
  const int n = a.n();
  HermEigen out;
  out.P = FMat(n, f);
  out.values.resize(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    const int src = n - 1 - c;  // ascending -> descending
    out.values[static_cast<size_t>(c)] = es.eigenvalues()[src];
    for (int i = 0; i < n; ++i) {
      if constexpr (std::is_same_v<Scalar, double>)
        out.P.at(i, c) = Quaternion(es.eigenvectors()(i, src));
      else
        out.P.at(i, c) = Quaternion(es.eigenvectors()(i, src).real(), es.eigenvectors()(i, src).imag(), 0, 0);
    }
  }
  return out;
}

}  // namespace

HermEigen hermitian_eigen(const FMat& a, double atol) {
  if (!a.is_hermitian(atol)) throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  switch (a.field()) {
    case Field::Real:
      return classical_eigen<Eigen::MatrixXd, double>(a, to_real(a), Field::Real);
    case Field::Complex:
      return classical_eigen<Eigen::MatrixXcd, Cx>(a, to_complex(a), Field::Complex);
    case Field::Quaternion:
      return quaternionic_eigen(a);
  }
  throw std::logic_error("unreachable");
}

BalancedForm balanced_normal_form(const FMat& a, double tol) {
  const int n = a.n();
  const double scale = std::max(1.0, a.norm());
  for (int k = 0; 2 * k + 1 <= n; ++k) {
    const double t = a.pow(2 * k + 1).rtrace();
    if (std::abs(t) > tol * scale)
      throw std::invalid_argument("balanced_normal_form: not austere-diagonalizable (odd trace power " +
                                  std::to_string(2 * k + 1) + " = " + std::to_string(t) + ")");
  }
  HermEigen e = hermitian_eigen(a);
  // Descending spectrum of a negation-symmetric multiset: v_k = -v_{n-1-k}.
  const int pairs = n / 2;
  BalancedForm out;
  out.P = FMat(n, a.field());
  std::vector<double> d(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < pairs; ++k) {
    const double hi = e.values[static_cast<size_t>(k)];
    const double lo = e.values[static_cast<size_t>(n - 1 - k)];
    if (std::abs(hi + lo) > 10 * tol * (scale + 1.0))
      throw std::invalid_argument("balanced_normal_form: eigenvalues fail to pair");
    const double lam = 0.5 * (hi - lo);
    out.lambdas.push_back(lam);
    d[static_cast<size_t>(2 * k)] = lam;
    d[static_cast<size_t>(2 * k + 1)] = -lam;
    for (int i = 0; i < n; ++i) {
      out.P.at(i, 2 * k) = e.P.at(i, k);
      out.P.at(i, 2 * k + 1) = e.P.at(i, n - 1 - k);
    }
  }
  if (n % 2 == 1) {
    const double mid = e.values[static_cast<size_t>(pairs)];
    out.lambdas.push_back(mid);
    d[static_cast<size_t>(n - 1)] = mid;
    for (int i = 0; i < n; ++i) out.P.at(i, n - 1) = e.P.at(i, pairs);
  }
  out.D = FMat::diag(d, a.field());
  return out;
}

}  // namespace austere
