#include "austere/sampling.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace austere {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(gen_() % span);
}

std::uint64_t trial_seed(std::uint64_t root_seed, std::uint64_t trial_index) {
  // splitmix64 of root ^ f(index)
  std::uint64_t z = root_seed ^ (0x9E3779B97F4A7C15ull * (trial_index + 1));
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Quaternion random_scalar(Field f, Rng& rng) {
  switch (f) {
    case Field::Real: return Quaternion(rng.gaussian());
    case Field::Complex: return Quaternion(rng.gaussian(), rng.gaussian(), 0, 0);
    case Field::Quaternion:
      return Quaternion(rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian());
  }
  return {};
}

FMat random_unitary(int n, Field f, Rng& rng) {
  FMat g(n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = random_scalar(f, rng);
  // Column-wise modified Gram-Schmidt in the right F-module.
  for (int c = 0; c < n; ++c) {
    for (int pass = 0; pass < 2; ++pass)
      for (int b = 0; b < c; ++b) {
        Quaternion coef;
        for (int i = 0; i < n; ++i) coef += g.at(i, b).conj() * g.at(i, c);
        for (int i = 0; i < n; ++i) g.at(i, c) -= g.at(i, b) * coef;
      }
    double nn = 0.0;
    for (int i = 0; i < n; ++i) nn += g.at(i, c).norm2();
    const double inv = 1.0 / std::sqrt(nn);
    for (int i = 0; i < n; ++i) g.at(i, c) *= inv;
  }
  if (f == Field::Real) {
    // land in SO(n): flip one column if the determinant came out negative
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = g.at(i, j).w;
    if (m.determinant() < 0)
      for (int i = 0; i < n; ++i) g.at(i, 0) = -g.at(i, 0);
  }
  return g;
}

FMat random_hermitian_traceless(int n, Field f, Rng& rng) {
  FMat m(n, f);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == j) {
        m.at(i, i) = Quaternion(rng.gaussian());
      } else {
        const Quaternion q = random_scalar(f, rng);
        m.at(i, j) = q;
        m.at(j, i) = q.conj();
      }
    }
  const double shift = m.rtrace() / n;
  for (int i = 0; i < n; ++i) m.at(i, i) -= Quaternion(shift);
  return m;
}

FMat random_sphere_tangent(const FMat& a, Rng& rng) {
  Rng& r = rng;
  for (int attempt = 0; attempt < 64; ++attempt) {
    FMat x = random_hermitian_traceless(a.n(), a.field(), r);
    x -= frobenius_inner(a, x) * a;
    const double nn = x.norm();
    if (nn > 1e-8) return x * (1.0 / nn);
  }
  throw std::runtime_error("random_sphere_tangent: degenerate draw");
}

std::vector<double> sample_balanced_diagonal(int n, Region region, Rng& rng) {
  const int p = (n - 1) / 2;
  const bool even = (n % 2 == 0);
  const int nlam = even ? n / 2 : p;  // strictly positive lambdas drawn
  if (region == Region::C4) {
    if (n != 4) throw std::invalid_argument("region C4 requires n = 4");
    return {0.5, -0.5, 0.5, -0.5};
  }
  if (region == Region::BTilde && !even)
    throw std::invalid_argument("region BTilde requires even n");
  std::vector<double> lam;
  for (int attempt = 0; attempt < 256; ++attempt) {
    lam.assign(static_cast<size_t>(nlam), 0.0);
    for (auto& l : lam) l = std::abs(rng.gaussian()) + 0.05;
    std::sort(lam.begin(), lam.end(), std::greater<>());
    double s2 = 0.0;
    for (double l : lam) s2 += 2.0 * l * l;
    const double inv = 1.0 / std::sqrt(s2);
    for (auto& l : lam) l *= inv;
    bool ok = lam.back() > 0.02;
    for (size_t i = 0; i + 1 < lam.size(); ++i)
      if (lam[i] - lam[i + 1] < 0.02) ok = false;
    if (ok) break;
  }
  std::vector<double> d;
  for (double l : lam) {
    d.push_back(l);
    d.push_back(-l);
  }
  if (!even) d.push_back(0.0);
  return d;
}

FMat sample_point(int n, Field f, Region region, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<double> d = sample_balanced_diagonal(n, region, rng);
  const FMat dm = FMat::diag(d, f);
  const FMat p = random_unitary(n, f, rng);
  return dm.conjugated_by(p);
}

}  // namespace austere
