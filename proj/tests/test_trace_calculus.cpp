#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>

#include "austere/basis.hpp"
#include "austere/sampling.hpp"
#include "austere/trace_calculus.hpp"

using namespace austere;

namespace {

// Independent oracle: f_k along the unit-speed great circle through A in
// direction X, evaluated by raw trace arithmetic.
double fk_on_circle(const FMat& a, const FMat& x, int k, double t) {
  const FMat p = std::cos(t) * a + std::sin(t) * x;
  return p.pow(k).rtrace();
}

FMat unit_sphere_point(int n, Field f, unsigned seed) {
  Rng rng(seed);
  FMat a = random_hermitian_traceless(n, f, rng);
  return a * (1.0 / a.norm());
}

}  // namespace

TEST_CASE("trace_power anchors") {
  CHECK(trace_power(FMat::diag({0.5, -0.5, 0.5, -0.5}, Field::Real), 3) == doctest::Approx(0.0));
  const double r = 1.0 / std::sqrt(20.0);
  CHECK(trace_power(FMat::diag({3 * r, -3 * r, r, -r}, Field::Real), 4) == doctest::Approx(0.41));
  const double s = 1.0 / std::sqrt(6.0);
  CHECK(trace_power(FMat::diag({2 * s, -s, -s}, Field::Real), 3) ==
        doctest::Approx(6.0 / std::pow(6.0, 1.5)));
}

TEST_CASE("sphere gradient anchors") {
  const double r = 1.0 / std::sqrt(20.0);
  const FMat a = FMat::diag({3 * r, -3 * r, r, -r}, Field::Real);
  const GradientReport g = grad_sphere(a, 3);
  const FMat expected = 0.6 * FMat::diag({1, 1, -1, -1}, Field::Real);
  CHECK((g.grad_sphere - expected).norm() < 1e-12);
  CHECK(g.norm_sphere == doctest::Approx(1.2));

  const FMat c4 = FMat::diag({0.5, -0.5, 0.5, -0.5}, Field::Real);
  CHECK(grad_sphere(c4, 3).norm_sphere < 1e-12);

  // f_2 is constant on the sphere
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    const FMat p = unit_sphere_point(4, f, 5);
    CHECK(grad_sphere(p, 2).norm_sphere < 1e-10);
  }

  CHECK_THROWS_AS(grad_sphere(2.0 * a, 3), std::invalid_argument);
}

TEST_CASE("gradient report tangency invariants") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    for (int n : {3, 4, 5}) {
      for (int k = 3; k <= 7; ++k) {
        const FMat a = unit_sphere_point(n, f, static_cast<unsigned>(100 * n + 10 * k + static_cast<int>(f)));
        const GradientReport g = grad_sphere(a, k);
        CHECK(std::abs(frobenius_inner(g.grad_sphere, a)) < 1e-10 * (1 + g.norm_sphere));
        CHECK(std::abs(g.grad_sphere.rtrace()) < 1e-10 * (1 + g.norm_sphere));
        CHECK(g.grad_sphere.is_hermitian(1e-12));
      }
    }
  }
}

TEST_CASE("gradients match finite differences") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    for (int n : {3, 4, 6}) {
      Rng rng(static_cast<unsigned>(7 * n + static_cast<int>(f)));
      for (int k = 3; k <= 7; ++k) {
        const FMat a = unit_sphere_point(n, f, static_cast<unsigned>(55 + n + k));
        const FMat x = random_sphere_tangent(a, rng);
        const GradientReport g = grad_sphere(a, k);
        const double h = 1e-5;
        const double fd = (fk_on_circle(a, x, k, h) - fk_on_circle(a, x, k, -h)) / (2 * h);
        const double dir = frobenius_inner(g.grad_sphere, x);
        CHECK(fd == doctest::Approx(dir).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("gradient equivariance under conjugation") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    Rng rng(13 + static_cast<int>(f));
    for (int t = 0; t < 10; ++t) {
      const FMat a = unit_sphere_point(5, f, static_cast<unsigned>(400 + t));
      const FMat p = random_unitary(5, f, rng);
      for (int k = 3; k <= 5; ++k) {
        const FMat lhs = grad_sphere(a.conjugated_by(p), k).grad_sphere;
        const FMat rhs = grad_sphere(a, k).grad_sphere.conjugated_by(p);
        CHECK((lhs - rhs).norm() < 1e-9 * (1 + rhs.norm()));
      }
    }
  }
}

TEST_CASE("sphere hessian") {
  const double r = 1.0 / std::sqrt(20.0);
  const FMat a = FMat::diag({3 * r, -3 * r, r, -r}, Field::Real);
  const FMat x = basis_sym(4, Field::Real, 1, 3);

  // second difference of f_3 along the great circle equals the Hessian
  const double h = 1e-4;
  const double fd = (fk_on_circle(a, x, 3, h) - 2 * fk_on_circle(a, x, 3, 0) + fk_on_circle(a, x, 3, -h)) / (h * h);
  const double hess = hessian_sphere(a, 3, x, x);
  CHECK(hess == doctest::Approx(fd).epsilon(1e-5));
  CHECK(hess == doctest::Approx(3 * (3 * r + r)));  // 3(mu_1 + mu_3) by direct arithmetic

  // k = 2: f_2 constant on the sphere
  CHECK(hessian_sphere(a, 2, x, x) == doctest::Approx(0.0));

  // symmetry and bilinearity on random tangent pairs
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    Rng rng(17 + static_cast<int>(f));
    const FMat p = unit_sphere_point(4, f, 91);
    for (int t = 0; t < 6; ++t) {
      const FMat u = random_sphere_tangent(p, rng);
      const FMat v = random_sphere_tangent(p, rng);
      for (int k = 3; k <= 5; ++k) {
        const double xy = hessian_sphere(p, k, u, v);
        const double yx = hessian_sphere(p, k, v, u);
        CHECK(xy == doctest::Approx(yx).epsilon(1e-10));
      }
      const double comb = hessian_sphere(p, 4, 0.7 * u + 1.3 * v, v);
      CHECK(comb == doctest::Approx(0.7 * hessian_sphere(p, 4, u, v) + 1.3 * hessian_sphere(p, 4, v, v)).epsilon(1e-10));
    }
  }

  // non-tangent argument rejected
  CHECK_THROWS_AS(hessian_sphere(a, 3, a, x), std::invalid_argument);
}

TEST_CASE("hessian matches finite differences across k") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    Rng rng(19 + static_cast<int>(f));
    for (int n : {3, 5}) {
      const FMat a = unit_sphere_point(n, f, static_cast<unsigned>(60 + n));
      for (int k = 3; k <= 5; ++k) {
        const FMat x = random_sphere_tangent(a, rng);
        const double h = 1e-4;
        const double fd =
            (fk_on_circle(a, x, k, h) - 2 * fk_on_circle(a, x, k, 0) + fk_on_circle(a, x, k, -h)) / (h * h);
        const double hess = hessian_sphere(a, k, x, x);
        CHECK(hess == doctest::Approx(fd).epsilon(1e-4));
      }
    }
  }
}

TEST_CASE("phi map") {
  const FMat c4 = FMat::diag({0.5, -0.5, 0.5, -0.5}, Field::Real);
  const auto v4 = phi_map(c4);
  REQUIRE(v4.size() == 1);
  CHECK(v4[0] == doctest::Approx(0.0));

  const double s = 1.0 / std::sqrt(6.0);
  const auto v3 = phi_map(FMat::diag({2 * s, -s, -s}, Field::Real));
  REQUIRE(v3.size() == 1);
  CHECK(v3[0] == doctest::Approx(0.408248).epsilon(1e-5));

  const double r = 1.0 / std::sqrt(2.0);
  const auto v5 = phi_map(FMat::diag({r, -r, 0, 0, 0}, Field::Real));
  REQUIRE(v5.size() == 2);
  CHECK(v5[0] == doctest::Approx(0.0));
  CHECK(v5[1] == doctest::Approx(0.0));
}

TEST_CASE("gram regularity verdicts") {
  const FMat c4 = FMat::diag({0.5, -0.5, 0.5, -0.5}, Field::Real);
  const RegularityVerdict vc = gram_regularity(c4);
  CHECK(vc.gram_det == doctest::Approx(0.0));
  CHECK_FALSE(vc.is_regular);

  const double r = 1.0 / std::sqrt(20.0);
  const RegularityVerdict vr = gram_regularity(FMat::diag({3 * r, -3 * r, r, -r}, Field::Real));
  CHECK(vr.gram_det == doctest::Approx(1.44));
  CHECK(vr.is_regular);
  REQUIRE(vr.lambdas.size() == 2);
  CHECK(vr.lambdas[0] == doctest::Approx(3 * r));

  const RegularityVerdict v5 = gram_regularity(FMat::diag({0.5, -0.5, 0.5, -0.5, 0}, Field::Real));
  CHECK_FALSE(v5.is_regular);

  // non-zero-level input rejected
  const double s = 1.0 / std::sqrt(6.0);
  CHECK_THROWS_AS(gram_regularity(FMat::diag({2 * s, -s, -s}, Field::Real)), std::invalid_argument);
}

TEST_CASE("regularity dichotomy on random diagonal zero-level points") {
  for (int n : {4, 5, 6}) {
    Rng rng(static_cast<unsigned>(100 + n));
    int decisive = 0;
    for (int t = 0; t < 300; ++t) {
      // random balanced diagonal, occasionally with forced ties
      const int p = (n - 1) / 2;
      const int nlam = (n % 2 == 0) ? n / 2 : p;
      std::vector<double> lam(static_cast<size_t>(nlam));
      for (auto& l : lam) l = std::abs(rng.gaussian());
      if (t % 5 == 0 && nlam >= 2) lam[1] = lam[0];  // exact tie -> decisively critical
      std::sort(lam.begin(), lam.end(), std::greater<>());
      double s2 = 0;
      for (double l : lam) s2 += 2 * l * l;
      for (auto& l : lam) l /= std::sqrt(s2);
      std::vector<double> d;
      for (double l : lam) {
        d.push_back(l);
        d.push_back(-l);
      }
      if (n % 2 == 1) d.push_back(0.0);
      const FMat a = FMat::diag(d, Field::Real);
      const RegularityVerdict v = gram_regularity(a);  // throws on hard disagreement
      if (!v.indeterminate) ++decisive;
      // ground truth from the sampled lambdas (plus the odd-case zero slot)
      std::vector<double> full = lam;
      if (n % 2 == 1) full.push_back(0.0);
      double gap = 1e9;
      for (size_t i = 0; i < full.size(); ++i)
        for (size_t j = i + 1; j < full.size(); ++j) gap = std::min(gap, std::abs(full[i] - full[j]));
      if (gap > 1e-6 && !v.indeterminate) CHECK(v.is_regular);
      if (gap < 1e-7 && !v.indeterminate) CHECK_FALSE(v.is_regular);
    }
    CHECK(decisive > 250);
  }
}

TEST_CASE("vandermonde identity") {
  Rng rng(77);
  for (int p = 1; p <= 4; ++p) {
    for (int t = 0; t < 20; ++t) {
      std::vector<double> lam(static_cast<size_t>(p + 1));
      for (auto& l : lam) l = std::abs(rng.gaussian()) + 0.01;
      Eigen::MatrixXd m(p + 1, p + 1);
      for (int r = 0; r <= p; ++r)
        for (int c = 0; c <= p; ++c) m(r, c) = std::pow(lam[static_cast<size_t>(c)], 2 * r);
      double prod = 1.0;
      for (int i = 0; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j)
          prod *= lam[static_cast<size_t>(j)] * lam[static_cast<size_t>(j)] -
                  lam[static_cast<size_t>(i)] * lam[static_cast<size_t>(i)];
      CHECK(m.determinant() == doctest::Approx(prod).epsilon(1e-9));
    }
  }
}
