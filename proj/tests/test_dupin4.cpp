#include "doctest.h"

#include <cmath>

#include "austere/basis.hpp"
#include "austere/dupin4.hpp"
#include "austere/sampling.hpp"
#include "austere/submanifold.hpp"

using namespace austere;

namespace {
const double kR20 = 1.0 / std::sqrt(20.0);

FMat anchor(Field f) { return FMat::diag({3 * kR20, -3 * kR20, kR20, -kR20}, f); }
}  // namespace

TEST_CASE("kappa profile anchors") {
  const KappaProfile kp = kappa_profile(anchor(Field::Real));
  const double s5 = std::sqrt(5.0);
  CHECK(kp.kappas[0] == doctest::Approx(s5));
  CHECK(kp.kappas[1] == doctest::Approx(-s5));
  CHECK(kp.kappas[2] == doctest::Approx(s5 / 2));
  CHECK(kp.kappas[3] == doctest::Approx(-s5 / 2));
  CHECK(kp.kappas[4] == 0.0);
  CHECK(kp.multiplicities == std::array<int, 5>{1, 1, 1, 1, 3});
  CHECK(kp.rho1 == doctest::Approx(1.2));

  const KappaProfile kh = kappa_profile(anchor(Field::Quaternion));
  CHECK(kh.kappas[0] == doctest::Approx(s5));
  CHECK(kh.multiplicities == std::array<int, 5>{4, 4, 4, 4, 9});

  // negation invariance
  const KappaProfile kn = kappa_profile(-anchor(Field::Real));
  for (int i = 0; i < 5; ++i)
    CHECK(kn.kappas[static_cast<size_t>(i)] == doctest::Approx(kp.kappas[static_cast<size_t>(i)]));

  // not in the principal-orbit set
  CHECK_THROWS_AS(kappa_profile(FMat::diag({0.5, -0.5, 0.5, -0.5}, Field::Real)),
                  std::invalid_argument);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(kappa_profile(FMat::diag({s, -s, 0, 0}, Field::Real)), std::invalid_argument);
}

TEST_CASE("kappas match the assembled shape operator spectrum") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    for (int t = 0; t < 6; ++t) {
      const FMat a = sample_point(4, f, Region::BTilde, trial_seed(11, static_cast<std::uint64_t>(t + 10 * static_cast<int>(f))));
      const KappaProfile kp = kappa_profile(a);
      const PrincipalSpectrum ps = principal_spectrum(frame_point(a), 1);
      REQUIRE(ps.clusters.size() == 5);
      // descending clusters: k1, k3, 0, -k3, -k1 with multiplicities m,m,2m+1,m,m
      CHECK(ps.clusters[0].first == doctest::Approx(kp.kappas[0]).epsilon(1e-8));
      CHECK(ps.clusters[1].first == doctest::Approx(kp.kappas[2]).epsilon(1e-8));
      CHECK(ps.clusters[3].first == doctest::Approx(kp.kappas[3]).epsilon(1e-8));
      CHECK(ps.clusters[4].first == doctest::Approx(kp.kappas[1]).epsilon(1e-8));
      CHECK(ps.clusters[0].second == kp.multiplicities[0]);
      CHECK(ps.clusters[2].second == kp.multiplicities[4]);
    }
  }
}

TEST_CASE("principal direction assignment") {
  Rng rng(5150);
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    const FMat d = anchor(f);
    const FMat p = random_unitary(4, f, rng);
    const FMat a = d.conjugated_by(p);
    const FramedPoint fp = frame_point(a);
    const Eigen::MatrixXd s = shape_operator(fp, 1);
    const KappaProfile kp = kappa_profile(a);
    for (int i = 1; i <= 4; ++i) {
      const auto [pi, pj] = principal_direction_pair(i);
      const FMat v = basis_sym(4, f, pi, pj).conjugated_by(p);
      // coordinates of v in the tangent frame
      Eigen::VectorXd coords(fp.tangent_dim());
      for (int b = 0; b < fp.tangent_dim(); ++b)
        coords[b] = frobenius_inner(fp.tangent_frame[static_cast<size_t>(b)], v);
      CHECK(coords.norm() == doctest::Approx(1.0).epsilon(1e-9));
      const Eigen::VectorXd sv = s * coords;
      CHECK((sv - kp.kappas[static_cast<size_t>(i - 1)] * coords).norm() < 1e-8);
    }
  }
}

TEST_CASE("curvature circles") {
  Rng rng(808);
  const FMat d = anchor(Field::Real);
  const FMat p = random_unitary(4, Field::Real, rng);
  const FMat a = d.conjugated_by(p);

  SUBCASE("t = 0 recovers the base point") {
    for (auto pair : {std::pair{1, 3}, std::pair{2, 4}, std::pair{1, 4}, std::pair{2, 3}})
      CHECK((curvature_circle(p, d, pair, 0.0) - a).norm() < 1e-14);
  }

  SUBCASE("derivative at t = 0") {
    const double h = 1e-6;
    for (auto pair : {std::pair{1, 3}, std::pair{2, 4}, std::pair{1, 4}, std::pair{2, 3}}) {
      const FMat fd = (curvature_circle(p, d, pair, h) - curvature_circle(p, d, pair, -h)) * (1.0 / (2 * h));
      const double mu_i = d.at(pair.first - 1, pair.first - 1).w;
      const double mu_j = d.at(pair.second - 1, pair.second - 1).w;
      const FMat expect = (mu_i - mu_j) * basis_sym(4, Field::Real, pair.first, pair.second).conjugated_by(p);
      CHECK((fd - expect).norm() < 1e-6 * (1 + expect.norm()));
    }
  }

  SUBCASE("kappas constant along the circles") {
    for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
      Rng r2(99 + static_cast<int>(f));
      const FMat df = anchor(f);
      const FMat pf = random_unitary(4, f, r2);
      for (auto pair : {std::pair{1, 3}, std::pair{2, 4}, std::pair{1, 4}, std::pair{2, 3}}) {
        const KappaProfile base = kappa_profile(df.conjugated_by(pf));
        for (int g = 0; g <= 20; ++g) {
          const double t = 2 * std::numbers::pi * g / 20.0;
          const KappaProfile kp = kappa_profile(curvature_circle(pf, df, pair, t));
          for (int i = 0; i < 5; ++i)
            CHECK(std::abs(kp.kappas[static_cast<size_t>(i)] - base.kappas[static_cast<size_t>(i)]) <= 1e-9);
        }
      }
    }
  }

  CHECK_THROWS_AS(curvature_circle(p, d, {1, 2}, 0.5), std::invalid_argument);
}

TEST_CASE("legendre lift") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    const FMat a = sample_point(4, f, Region::BTilde, 321 + static_cast<unsigned>(f));
    const LegendreLift lift = legendre_lift(a);
    CHECK(std::abs(lie_inner(lift.z1, lift.z1)) < 1e-10);
    CHECK(std::abs(lie_inner(lift.zlast, lift.zlast)) < 1e-10);
    CHECK(std::abs(lie_inner(lift.z1, lift.zlast)) < 1e-10);
    for (const LieVector& k : lift.k) CHECK(std::abs(lie_inner(k, k)) < 1e-10);
  }

  // Gauss image at the anchor: xi_1 = diag(1,1,-1,-1)/2
  const LegendreLift lift = legendre_lift(anchor(Field::Real));
  const FMat expect = 0.5 * FMat::diag({1, 1, -1, -1}, Field::Real);
  CHECK((lift.zlast.b - expect).norm() < 1e-12);
}

TEST_CASE("curvature sphere span ranks") {
  double gap = 0.0;
  CHECK(curvature_sphere_span(1, Field::Real, 80, 17, &gap) == 11);
  CHECK(gap >= 1e6);
  CHECK(curvature_sphere_span(5, Field::Real, 80, 17, &gap) == 10);
  CHECK(gap >= 1e6);
  CHECK(curvature_sphere_span(5, Field::Complex, 120, 17, &gap) == 16);
  CHECK(gap >= 1e6);
  CHECK_THROWS_AS(curvature_sphere_span(6, Field::Real, 80, 17), std::invalid_argument);
  CHECK_THROWS_AS(curvature_sphere_span(1, Field::Real, 5, 17), std::invalid_argument);
}

TEST_CASE("chart inverse and field evaluation") {
  const FMat d = anchor(Field::Real);
  const FMat id = FMat::identity(4, Field::Real);

  // at the diagonal point the chart factor is trivial up to signs
  const ChartPoint cp = chart_inverse(d, id);
  CHECK((cp.p - id).norm() < 1e-12);
  CHECK((cp.d0 - d).norm() < 1e-12);

  // roundtrip through a nearby point
  Rng rng(31);
  const FMat q = random_unitary(4, Field::Real, rng);
  const FMat b = d.conjugated_by(q);
  const ChartPoint cb = chart_inverse(b, q);
  CHECK((cb.d0 - d).norm() < 1e-10);
  CHECK((b.conjugated_by(cb.p.conj_transpose()) - cb.d0).norm() < 1e-10);

  // Y fields at the diagonal point are the sym vectors themselves
  for (auto pair : {std::pair{1, 2}, std::pair{1, 3}, std::pair{3, 4}})
    CHECK((y_field(d, pair, id) - basis_sym(4, Field::Real, pair.first, pair.second)).norm() < 1e-12);

  // exact flow follows the conjugation circle
  const FMat moved = flow_y(d, {1, 3}, 0.01, id);
  const double mu13 = d.at(0, 0).w - d.at(2, 2).w;
  CHECK((moved - curvature_circle(id, d, {1, 3}, 0.01 / mu13)).norm() < 1e-12);
}

TEST_CASE("bracket anchors") {
  const FMat d = anchor(Field::Real);
  const FMat e13 = basis_sym(4, Field::Real, 1, 3);
  const FMat e34 = basis_sym(4, Field::Real, 3, 4);

  const FMat b1 = bracket_fields(d, {1, 2}, {2, 3});
  const double c1 = 5.0 / (6.0 * std::sqrt(10.0));
  CHECK((b1 - c1 * e13).norm() < 1e-12);
  CHECK(frobenius_inner(b1, e13) == doctest::Approx(0.26352).epsilon(1e-4));

  const FMat b2 = bracket_fields(d, {1, 3}, {1, 4});
  const double c2 = 5.0 / (2.0 * std::sqrt(10.0));
  CHECK((b2 - c2 * e34).norm() < 1e-12);

  CHECK((bracket_fields(d, {1, 2}, {3, 4})).norm() < 1e-12);
  CHECK((bracket_fields(d, {1, 2}, {1, 2})).norm() == 0.0);
}

TEST_CASE("brackets match finite-difference flow commutators") {
  Rng rng(2718);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> lam = sample_balanced_diagonal(4, Region::BTilde, rng);
    const FMat d = FMat::diag(lam, Field::Real);
    for (auto [p1, p2] : {std::pair{std::pair{1, 2}, std::pair{2, 3}},
                          std::pair{std::pair{1, 2}, std::pair{1, 4}},
                          std::pair{std::pair{1, 3}, std::pair{1, 4}},
                          std::pair{std::pair{2, 4}, std::pair{3, 4}}}) {
      const FMat cf = bracket_fields(d, p1, p2);
      const FMat fd = bracket_fields_fd(d, p1, p2);
      CHECK((cf - fd).norm() < 1e-4 * (1.0 + cf.norm()));
    }
  }
}

TEST_CASE("weak irreducibility") {
  std::vector<double> obs;
  CHECK(weak_irreducibility_check(anchor(Field::Real), &obs));
  REQUIRE(obs.size() == 5);
  for (double o : obs) CHECK(o >= 1e-3);

  const double r34 = 1.0 / std::sqrt(34.0);
  CHECK(weak_irreducibility_check(FMat::diag({4 * r34, -4 * r34, r34, -r34}, Field::Real)));
}

TEST_CASE("chart differential spans the tangent space") {
  CHECK(chart_differential_rank(anchor(Field::Real)) == 7);
  Rng rng(12);
  for (int t = 0; t < 5; ++t) {
    std::vector<double> lam = sample_balanced_diagonal(6, Region::BTilde, rng);
    CHECK(chart_differential_rank(FMat::diag(lam, Field::Real)) == ambient_dim(6, Field::Real) - 1 - 2);
  }
}
