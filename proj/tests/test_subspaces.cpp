#include "doctest.h"

#include <cmath>

#include "austere/c4_geometry.hpp"
#include "austere/sampling.hpp"
#include "austere/subspaces.hpp"

using namespace austere;

namespace {

RatMatrix diag_rat(const std::vector<long>& d) {
  RatMatrix m(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = Rat(d[i]);
  return m;
}

}  // namespace

TEST_CASE("exact austerity of single matrices") {
  RatMatrix c4(4);
  const Rat h(1, 2);
  c4.at(0, 0) = h;
  c4.at(1, 1) = -h;
  c4.at(2, 2) = h;
  c4.at(3, 3) = -h;
  CHECK(is_austere_exact(c4));

  CHECK_FALSE(is_austere_exact(diag_rat({2, -1, -1})));

  for (long x : {1L, -3L, 7L}) {
    RatMatrix m(2);
    m.at(0, 1) = m.at(1, 0) = Rat(x);
    CHECK(is_austere_exact(m));
  }

  RatMatrix asym(2);
  asym.at(0, 1) = 1;
  CHECK_THROWS_AS(is_austere_exact(asym), std::invalid_argument);
}

TEST_CASE("subspace testing with witnesses") {
  // Bryant n=4 paired family is austere
  const SubspaceSpec paired = bryant_subspace(BryantFamily::PairedBlock, 4);
  CHECK(paired.dim() == 6);
  CHECK(is_austere_subspace(paired, 2000, 11).austere);

  // span{diag(1,0,-1), diag(0,1,-1)} is not: witness diag(1,1,-2)
  SubspaceSpec bad;
  bad.n = 3;
  bad.basis.push_back(diag_rat({1, 0, -1}));
  bad.basis.push_back(diag_rat({0, 1, -1}));
  const SubspaceVerdict v = is_austere_subspace(bad, 2000, 5);
  CHECK_FALSE(v.austere);
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(is_austere_exact(*v.witness));

  // zero subspace
  SubspaceSpec zero;
  zero.n = 3;
  CHECK(is_austere_subspace(zero, 10, 1).austere);

  // grid mode agrees
  CHECK_FALSE(is_austere_subspace_grid(bad).austere);
  SubspaceSpec small;
  small.n = 2;
  RatMatrix offdiag(2);
  offdiag.at(0, 1) = offdiag.at(1, 0) = 1;
  RatMatrix diag2(2);
  diag2.at(0, 0) = 1;
  diag2.at(1, 1) = -1;
  small.basis = {offdiag, diag2};
  CHECK(is_austere_subspace_grid(small).austere);

  // serial/parallel determinism of the verdict
  const SubspaceVerdict s1 = is_austere_subspace(bad, 600, 9, 1);
  const SubspaceVerdict s2 = is_austere_subspace(bad, 600, 9, 4);
  CHECK(s1.austere == s2.austere);
  CHECK(s1.witness_coefficients == s2.witness_coefficients);
}

TEST_CASE("bryant families have the tabulated dimensions and are austere") {
  for (int n : {4, 5, 6}) {
    const int p = (n - 1) / 2;
    for (BryantFamily fam : {BryantFamily::PairedBlock, BryantFamily::LambdaBlock}) {
      const SubspaceSpec spec = bryant_subspace(fam, n);
      CHECK(spec.dim() == bryant_dimension(fam, n));
      CHECK(is_austere_subspace(spec, 1500, static_cast<unsigned>(17 + n)).austere);
    }
    for (int k = 1; k <= p; ++k) {
      BryantParams params;
      params.k = k;
      const SubspaceSpec spec = bryant_subspace(BryantFamily::OffDiagonalBlock, n, params);
      CHECK(spec.dim() == k * (n - k));
      CHECK(is_austere_subspace(spec, 1500, static_cast<unsigned>(29 + n + k)).austere);
    }
  }
  CHECK(bryant_subspace(BryantFamily::OffDiagonalBlock, 4, {.k = 2}).dim() == 4);
  CHECK(bryant_subspace(BryantFamily::LambdaBlock, 4).dim() == 5);
  CHECK_THROWS_AS(bryant_subspace(BryantFamily::OffDiagonalBlock, 4, {.k = 3}), std::invalid_argument);

  // basis elements are linearly independent: exact Gram rank equals dim
  const SubspaceSpec paired6 = bryant_subspace(BryantFamily::PairedBlock, 6);
  RatMatrix gram(paired6.dim());
  for (int i = 0; i < paired6.dim(); ++i)
    for (int j = 0; j < paired6.dim(); ++j) {
      Rat dot = 0;
      for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c)
          dot += paired6.basis[static_cast<size_t>(i)].at(r, c) * paired6.basis[static_cast<size_t>(j)].at(r, c);
      gram.at(i, j) = dot;
    }
  CHECK(gram.rank() == paired6.dim());
}

TEST_CASE("constrained three-parameter family") {
  BryantParams params;
  params.lambdas = {Rat(1), Rat(1), Rat(-1)};
  const SubspaceSpec spec = bryant_subspace(BryantFamily::Table2Special, 4, params);
  CHECK(spec.dim() == 3);
  CHECK(is_austere_subspace(spec, 3000, 23).austere);
  CHECK(is_austere_subspace_grid(spec).austere);

  // random admissible rational triples: l3 = -(l1+l2)/(1+l1*l2)
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    Rat l1(rng.uniform_int(0, 24), rng.uniform_int(1, 9));
    Rat l2(rng.uniform_int(0, 24), rng.uniform_int(1, 9));
    l1.canonicalize();
    l2.canonicalize();
    if (l2 > l1) std::swap(l1, l2);
    Rat l3 = -(l1 + l2) / (1 + l1 * l2);
    l3.canonicalize();
    CHECK(l1 * l2 * l3 + l1 + l2 + l3 == 0);
    BryantParams pr;
    pr.lambdas = {l1, l2, l3};
    const SubspaceSpec sp = bryant_subspace(BryantFamily::Table2Special, 4, pr);
    CHECK(is_austere_subspace(sp, 400, static_cast<unsigned>(100 + t)).austere);
  }

  // violated constraint rejected: 1*1*(-2) + 1 + 1 - 2 = -2
  BryantParams badp;
  badp.lambdas = {Rat(1), Rat(1), Rat(-2)};
  CHECK_THROWS_AS(bryant_subspace(BryantFamily::Table2Special, 4, badp), std::invalid_argument);
  // ordering violated
  BryantParams badq;
  badq.lambdas = {Rat(1), Rat(2), Rat(-1)};
  CHECK_THROWS_AS(bryant_subspace(BryantFamily::Table2Special, 4, badq), std::invalid_argument);
}

TEST_CASE("witt bound") {
  CHECK(witt_bound(3, 1, 1) == 2);
  CHECK(witt_bound(7, 2, 2) == 5);
  CHECK(witt_bound(11, 4, 4) == 7);
  CHECK(witt_bound(3, 2, 1) == 1);
  CHECK_THROWS_AS(witt_bound(2, 2, 1), std::invalid_argument);
  // monotone non-increasing in max(r,s) for fixed n and min(r,s)
  for (int n = 2; n <= 10; ++n)
    for (int lo = 0; lo <= n; ++lo)
      for (int hi = lo; hi + lo <= n - 1; ++hi)
        CHECK(witt_bound(n, hi, lo) >= witt_bound(n, hi + 1, lo));
}

TEST_CASE("isotropic search") {
  Eigen::MatrixXd f1 = Eigen::Vector3d(1, -1, 0).asDiagonal();
  const auto found = isotropic_search(f1, 2, 100, 3);
  REQUIRE(found.has_value());
  CHECK((found->transpose() * f1 * (*found)).cwiseAbs().maxCoeff() < 1e-10);

  Eigen::MatrixXd f2 = Eigen::Vector3d(1, 1, -1).asDiagonal();
  CHECK_FALSE(isotropic_search(f2, 2, 2000, 3).has_value());
  CHECK(isotropic_search(f2, 1, 100, 3).has_value());

  // signature (2,2) with nullity 3: the 7x7 second-form case, target 5
  Eigen::VectorXd d(7);
  d << 1.3, 0.4, 0, 0, 0, -0.7, -2.0;
  Eigen::MatrixXd f3 = d.asDiagonal();
  const auto found3 = isotropic_search(f3, 5, 100, 5);
  REQUIRE(found3.has_value());
  CHECK((found3->transpose() * f3 * (*found3)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK_FALSE(isotropic_search(f3, 6, 500, 5).has_value());

  // random forms: found dimensions never exceed the witt bound
  Rng rng(77);
  for (int t = 0; t < 30; ++t) {
    const int dim = 4 + static_cast<int>(rng.uniform_int(0, 6));
    Eigen::MatrixXd g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = rng.gaussian();
    Eigen::MatrixXd form = 0.5 * (g + g.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form, Eigen::EigenvaluesOnly);
    int r = 0, s = 0;
    for (int i = 0; i < dim; ++i) (es.eigenvalues()[i] > 0 ? r : s)++;
    const int bound = witt_bound(dim, r, s);
    for (int target = 1; target <= dim; ++target) {
      const auto w = isotropic_search(form, target, 50, static_cast<unsigned>(1000 + t));
      if (target <= bound) {
        REQUIRE(w.has_value());
        CHECK((w->transpose() * form * (*w)).cwiseAbs().maxCoeff() < 1e-9);
      } else {
        CHECK_FALSE(w.has_value());
      }
    }
  }
}

TEST_CASE("dimension bound and its ingredients") {
  CHECK(dimest_bound(4) == 6);
  CHECK(dimest_bound(5) == 8);
  CHECK(dimest_bound(3) == 3);

  // even n: bound equals the paired-family dimension (p+1)(p+2)
  for (int n : {4, 6, 8})
    CHECK(dimest_bound(n) == bryant_dimension(BryantFamily::PairedBlock, n));

  // chain: 1 + nullity + index reproduces the bound
  for (int n = 3; n <= 8; ++n) {
    const DimestReport rep = verify_dimest_ingredients(n, 10, static_cast<unsigned>(n));
    CHECK(rep.pass());
    CHECK(1 + rep.expected_nullity + rep.expected_index == dimest_bound(n));
    const int tangent_dim = ambient_dim(n, Field::Real) - 1 - (n - 1) / 2;
    CHECK(witt_bound(tangent_dim, rep.expected_index, rep.expected_index) + 1 == dimest_bound(n));
  }
}

TEST_CASE("conjugated critical-orbit spans are exactly austere") {
  for (Field f : {Field::Real, Field::Complex}) {
    const SubspaceSpec spec = c4_conjugated_subspace_exact(f);
    CHECK(spec.dim() == (f == Field::Real ? 4 : 6));
    for (const RatMatrix& b : spec.basis) CHECK(b.is_symmetric());
    CHECK(is_austere_subspace(spec, 3000, 99).austere);
  }
  CHECK_THROWS_AS(c4_conjugated_subspace_exact(Field::Quaternion), std::invalid_argument);
}

TEST_CASE("unconjugated representation spans are exactly austere") {
  // the sqrt(2)-scaled displays have integer entries already
  for (Field f : {Field::Real, Field::Complex}) {
    SubspaceSpec spec;
    bool first = true;
    for (const Eigen::MatrixXi& rep : c4_rep_int(f)) {
      if (first) {
        spec.n = static_cast<int>(rep.rows());
        first = false;
      }
      RatMatrix m(spec.n);
      for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j) m.at(i, j) = Rat(rep(i, j));
      spec.basis.push_back(std::move(m));
    }
    CHECK(is_austere_subspace(spec, 3000, 7).austere);
  }
}

TEST_CASE("isotropy reflection identity holds exactly in rationals") {
  // Per 2x2 block: with R = [[a0, -c], [-c, -a0]] (unscaled) and the block
  // M = [[c, a], [a, -c]], R^t M R = -(a0^2 + c^2) M.
  Rng rng(55);
  for (int t = 0; t < 50; ++t) {
    Rat a0(rng.uniform_int(-9, 9), rng.uniform_int(1, 7));
    Rat c(rng.uniform_int(-9, 9), rng.uniform_int(1, 7));
    a0.canonicalize();
    c.canonicalize();
    RatMatrix m(2), r(2);
    m.at(0, 0) = c;
    m.at(1, 1) = -c;
    m.at(0, 1) = m.at(1, 0) = a0;
    r.at(0, 0) = a0;
    r.at(0, 1) = r.at(1, 0) = -c;
    r.at(1, 1) = -a0;
    const RatMatrix lhs = r.transpose() * m * r;
    const Rat s2 = a0 * a0 + c * c;
    RatMatrix rhs = Rat(-1) * s2 * m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(lhs.at(i, j) == rhs.at(i, j));
  }
}

TEST_CASE("rational parsing round trip") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(rational_to_string(Rat(6, 8)) == "3/4");
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
