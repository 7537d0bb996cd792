#include <doctest.h>

#include "cqg/arith.hpp"

using namespace cqg;

TEST_CASE("gaussian rationals") {
  Scalar a = Scalar::gauss(Rational(1, 2), 1);
  Scalar b = Scalar::gauss(3, Rational(-2, 3));
  CHECK((a * b) / b == a);
  CHECK(a.conj() == Scalar::gauss(Rational(1, 2), -1));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a / Scalar::zero(Backend::GaussQ), std::domain_error);
}

TEST_CASE("laurent arithmetic") {
  Laurent s(1, 1);
  Laurent x = s + Laurent(2, -3);
  Laurent y = x * x;
  CHECK(y.coeff(2) == 1);
  CHECK(y.coeff(-2) == 4);
  CHECK(y.coeff(-6) == 4);
  CHECK((y - x * x).is_zero());
  CHECK(pow(s, -3) == Laurent(1, -3));
  CHECK_THROWS_AS(x.inverse(), std::domain_error);
  CHECK(x.evaluate(2.0) == doctest::Approx(2.25));

  Scalar mu = laurent_mu(-1);
  CHECK((mu / mu) == Scalar::one(Backend::Laurent));
  CHECK(mu.conj() == mu);
}

TEST_CASE("backend mixing throws") {
  CHECK_THROWS_AS(Scalar::gauss(1) + Scalar::floatc(1), BackendMismatch);
  CHECK_THROWS_AS((void)(Scalar::gauss(1) == Scalar(Laurent(1))), BackendMismatch);
  CHECK(Scalar::gauss(2, 1).to_backend(Backend::FloatC) == Scalar::floatc(2, 1));
}

TEST_CASE("float equality uses tolerance") {
  CHECK(Scalar::floatc(1.0) == Scalar::floatc(1.0 + 1e-12));
  CHECK_FALSE(Scalar::floatc(1.0) == Scalar::floatc(1.0 + 1e-6));
}

TEST_CASE("rationalize and exact square roots") {
  CHECK(rationalize(0.75) == Rational(3, 4));
  CHECK(rationalize(-1.0 / 3.0) == Rational(-1, 3));
  Rational r;
  CHECK(rational_sqrt(Rational(9, 16), r));
  CHECK(r == Rational(3, 4));
  CHECK_FALSE(rational_sqrt(Rational(2), r));
}

TEST_CASE("json round trip") {
  for (const Scalar& x : {Scalar::gauss(Rational(-7, 3), Rational(1, 5)), Scalar(Laurent(std::map<int, Rational>{{-2, 3}, {4, Rational(1, 2)}})),
                          Scalar::floatc(0.25, -1.5)}) {
    CHECK(scalar_from_json(to_json(x)) == x);
  }
  CHECK(scalar_from_json(Json::parse(R"({"re":"2"})")) == Scalar::gauss(2));
  CHECK_THROWS(scalar_from_json(Json::parse(R"("x")")));
}
