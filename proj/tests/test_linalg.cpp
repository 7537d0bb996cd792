#include <doctest.h>

#include <random>

#include "cqg/linalg.hpp"

using namespace cqg;

namespace {

Matrix gq(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(rows.size(), rows.begin()->size(), Backend::GaussQ);
  std::size_t i = 0;
  for (auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Scalar::gauss(v);
    ++i;
  }
  return m;
}

Matrix random_float(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = {nd(rng), nd(rng)};
  return Matrix::from_eigen(e);
}

// G-positive operators: A = G^{-1} H with H hermitian positive definite.
Matrix random_gram(std::size_t n, std::mt19937_64& rng) {
  Matrix x = random_float(n, rng);
  return x.adjoint() * x + Scalar::floatc(n) * Matrix::identity(n, Backend::FloatC);
}

}  // namespace

TEST_CASE("exact elimination") {
  Matrix a = gq({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  Matrix ns = nullspace(a);
  REQUIRE(ns.cols() == 1);
  CHECK((a * ns).is_zero());
  Matrix b = gq({{2, 1}, {1, 1}});
  CHECK(b * inverse(b) == Matrix::identity(2, Backend::GaussQ));
  CHECK_THROWS_AS(inverse(a), std::domain_error);
  auto x = solve(b, gq({{3}, {2}}));
  REQUIRE(x);
  CHECK(*x == gq({{1}, {1}}));
  CHECK_FALSE(solve(gq({{1, 1}, {1, 1}}), gq({{1}, {2}})));
}

TEST_CASE("canonical basis does not depend on the spanning set") {
  Matrix s1 = gq({{1, 0}, {0, 1}, {1, 1}});
  Matrix s2 = gq({{2, 1}, {3, 1}, {5, 2}});
  CHECK(canonical_basis(s1) == canonical_basis(s2));
  CHECK(canonical_basis(s1.to_backend(Backend::FloatC)) == canonical_basis(s2).to_backend(Backend::FloatC));
}

TEST_CASE("gram_adjoint") {
  Matrix g = gq({{1, 0}, {0, 2}});
  Matrix a = gq({{0, 1}, {0, 0}});
  Matrix ad = gram_adjoint(a, g);
  // <Ax, y> = <x, A^dagger y> on basis vectors
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix ei(2, 1, Backend::GaussQ), ej(2, 1, Backend::GaussQ);
      ei(i, 0) = Scalar::gauss(1);
      ej(j, 0) = Scalar::gauss(1);
      CHECK((ej.adjoint() * g * a * ei) == ((ad * ej).adjoint() * g * ei));
    }
  }
  CHECK(gram_adjoint(ad, g) == a);
  CHECK(gram_adjoint(Matrix::identity(2, Backend::GaussQ), g) == Matrix::identity(2, Backend::GaussQ));
  CHECK_THROWS_WITH(gram_adjoint(a, gq({{1, 1}, {1, 1}})), "degenerate form");
}

TEST_CASE("exact positive_sqrt") {
  Matrix i2 = Matrix::identity(2, Backend::GaussQ);
  CHECK(positive_sqrt(gq({{4, 0}, {0, 9}}), i2) == gq({{2, 0}, {0, 3}}));
  CHECK(positive_sqrt(i2, i2) == i2);
  // eigenvalues 1 and 9 on (1,-1), (1,1)
  Matrix a = gq({{5, 4}, {4, 5}});
  Matrix p = positive_sqrt(a, i2);
  CHECK(p * p == a);
  CHECK(p == gq({{2, 1}, {1, 2}}));
  CHECK_THROWS(positive_sqrt(gq({{2, 1}, {1, 2}}), i2));  // sqrt(3) is irrational
  CHECK_THROWS_WITH(positive_sqrt(gq({{-1, 0}, {0, 1}}), i2), "operator not positive");
  CHECK_THROWS_WITH(positive_sqrt(gq({{1, 1}, {0, 1}}), i2), "operator not self-adjoint");
}

TEST_CASE("float positive_sqrt matches the diagonalization oracle") {
  Matrix a = gq({{2, 1}, {1, 2}}).to_backend(Backend::FloatC);
  Matrix p = positive_sqrt(a, Matrix::identity(2, Backend::FloatC));
  // oracle: eigenvectors (1,-1)/sqrt2 and (1,1)/sqrt2 with roots 1 and sqrt3
  double r3 = std::sqrt(3.0);
  Eigen::MatrixXcd o(2, 2);
  o << (1 + r3) / 2, (r3 - 1) / 2, (r3 - 1) / 2, (1 + r3) / 2;
  CHECK(rel_residual(p, Matrix::from_eigen(o)) < 1e-12);
}

TEST_CASE("random G-positive roots and polar decompositions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + trial % 8;
    Matrix g = random_gram(n, rng);
    Matrix a = inverse(g) * random_gram(n, rng);
    Matrix p = positive_sqrt(a, g);
    CHECK(rel_residual(p * p, a) < 1e-10);
    CHECK(is_self_adjoint(p, g));
    CHECK(rel_residual(positive_sqrt(p * p, g), p) < 1e-8);
    Matrix x = random_float(n, rng);
    Polar pol = polar_right(x, g);
    CHECK(rel_residual(pol.u * pol.p, x) < 1e-9);
    CHECK(rel_residual(gram_adjoint(pol.u, g) * pol.u, Matrix::identity(n, Backend::FloatC)) < 1e-9);
  }
}

TEST_CASE("polar_right trivial cases") {
  Matrix i2 = Matrix::identity(2, Backend::GaussQ);
  Matrix a(2, 2, Backend::GaussQ);
  a(0, 0) = Scalar::gauss(2);
  a(1, 1) = Scalar::gauss(Rational(1, 2));
  Polar pol = polar_right(a, i2);
  CHECK(pol.u == i2);
  CHECK(pol.p == a);
  Matrix swap = gq({{0, 1}, {1, 0}});
  pol = polar_right(swap, i2);
  CHECK(pol.u == swap);
  CHECK(pol.p == i2);
}

TEST_CASE("involution intertwining of the positive root") {
  // sigma A sigma = A^{-1} implies sigma P sigma = P^{-1}
  Matrix sigma = gq({{0, 1}, {1, 0}});
  Matrix a = gq({{4, 0}, {0, 1}});
  a(1, 1) = Scalar::gauss(Rational(1, 4));
  Matrix p = positive_sqrt(a, Matrix::identity(2, Backend::GaussQ));
  CHECK(sigma * p * sigma == inverse(p));
}

TEST_CASE("eigensplit") {
  auto s = eigensplit(Matrix::identity(3, Backend::GaussQ));
  REQUIRE(s.size() == 1);
  CHECK(s[0].basis.cols() == 3);
  s = eigensplit(gq({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  REQUIRE(s.size() == 2);
  CHECK(s[0].value == Scalar::gauss(1));
  CHECK(s[1].basis.cols() == 2);
  CHECK_THROWS_WITH(eigensplit(gq({{1, 1}, {0, 1}})), "not diagonalizable at tolerance");
  // rotation by 120 degrees: eigenvalues outside Q(i), float fallback
  s = eigensplit(gq({{0, -1}, {1, -1}}));
  REQUIRE(s.size() == 2);
  CHECK_FALSE(s[0].value.is_exact());
  // i and -i stay exact
  s = eigensplit(gq({{0, -1}, {1, 0}}));
  REQUIRE(s.size() == 2);
  CHECK(s[0].value == Scalar::gauss(0, -1));
}
