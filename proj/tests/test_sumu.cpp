#include <doctest.h>

#include "cqg/sumu.hpp"

using namespace cqg;
using namespace cqg::sumu;

namespace {

const Mono one{}, a{false, 1, 0, 0}, h{true, 1, 0, 0}, c{false, 0, 1, 0}, d{false, 0, 0, 1};

Mono mono(bool hat, int k, int m, int n) { return Mono{hat, k, m, n}; }

}  // namespace

TEST_CASE("normal forms of short words") {
  Engine e(1);
  // h a = 1 + mu d c = 1 + mu c d
  Poly ha = e.normalize({Gen::H, Gen::A});
  CHECK(ha == monomial(one) + monomial(mono(false, 0, 1, 1), e.mu(1)));
  CHECK(e.normalize({Gen::C, Gen::A}) == monomial(mono(false, 1, 1, 0), e.mu(-1)));
  CHECK(e.normalize({Gen::A, Gen::H}) == monomial(one) + monomial(mono(false, 0, 1, 1), e.mu(3)));
  CHECK(e.normalize({Gen::D, Gen::C}) == monomial(mono(false, 0, 1, 1)));
  CHECK(e.is_canonical(a.word()));
  CHECK_FALSE(e.is_canonical({Gen::D, Gen::H}));
  CHECK(e.normalize({Gen::D, Gen::H}) == monomial(mono(true, 1, 0, 1), e.mu(1)));
}

TEST_CASE("mu depends on the sign") {
  Engine p(1), m(-1);
  CHECK(p.mu(1) == Laurent::monomial(2));
  CHECK(m.mu(1) == Laurent::monomial(2, -1));
  CHECK(m.mu(2) == Laurent::monomial(4));
  CHECK(m.mu(-1) == Laurent::monomial(-2, -1));
}

TEST_CASE("coproduct on generators") {
  Engine e(1);
  CHECK(e.delta(a) == Tensor2{{{a, a}, Laurent(1)}, {{d, c}, e.mu(2)}});
  CHECK(e.delta(h) == Tensor2{{{h, h}, Laurent(1)}, {{c, d}, e.mu(2)}});
  CHECK(e.delta(c) == Tensor2{{{c, a}, Laurent(1)}, {{h, c}, Laurent(1)}});
  CHECK(e.delta(d) == Tensor2{{{a, d}, Laurent(1)}, {{d, h}, Laurent(1)}});
  CHECK(e.eps(a) == Laurent(1));
  CHECK(e.eps(c).is_zero());
}

TEST_CASE("antipode and involution") {
  Engine e(1);
  CHECK(e.antipode(a) == monomial(h));
  // S(gamma°) = -mu^-1 gamma°
  CHECK(e.antipode(d) == monomial(d, -e.mu(-1)));
  // S^2(gamma) = mu^2 gamma
  CHECK(e.apply(e.antipode_op(), e.antipode(c)) == monomial(c, e.mu(2)));
  CHECK(e.circ(c) == monomial(d));
  CHECK(e.apply(e.antipode_inverse_op(), e.antipode(mono(true, 2, 1, 1))) == monomial(mono(true, 2, 1, 1)));
}

TEST_CASE("characters and sandwiches") {
  Engine e(1);
  CHECK(e.theta()(h) == e.s(2));
  CHECK(e.beta()(mono(false, 2, 0, 0)) == e.s(-2));
  // theta(gamma alpha) = 0
  CHECK(e.evaluate(e.theta(), e.normalize({Gen::C, Gen::A})).is_zero());
  Functional binv = e.after_antipode(e.beta());
  CHECK(e.sandwich(e.beta(), binv)(c) == monomial(c, e.s(2)));
  CHECK(e.sandwich(e.beta(), binv)(d) == monomial(d, e.s(-2)));
}

TEST_CASE("basis enumeration") {
  Engine e(1);
  auto b = e.basis(2);
  // degree 0: 1; degree 1: a h c d; degree 2: aa hh ac hc ad hd cc cd dd
  CHECK(b.size() == 14);
  CHECK(b.front() == one);
}

TEST_CASE("catalog holds at both signs") {
  for (int sign : {1, -1}) {
    Engine e(sign);
    for (const auto& r : verify_all(e, 4)) {
      INFO(r.identity, " sign ", sign, " ", r.witness);
      CHECK(r.passed);
      CHECK(r.checked > 0);
    }
  }
}

TEST_CASE("U fixes gamma up to sign") {
  Engine m(-1), p(1);
  Op um = m.compose(m.antipode_op(), m.compose(m.sandwich(m.after_antipode(m.beta()), m.beta()),
                                               m.sandwich(m.after_antipode(m.beta()), m.after_antipode(m.beta()))));
  CHECK(um(c) == monomial(c));
  Op up = p.compose(p.antipode_op(), p.compose(p.sandwich(p.after_antipode(p.beta()), p.beta()),
                                               p.sandwich(p.after_antipode(p.beta()), p.after_antipode(p.beta()))));
  CHECK(up(c) == monomial(c, Laurent(-1)));
}

TEST_CASE("unknown identity throws") {
  Engine e(1);
  CHECK_THROWS_AS(verify(e, "nope", 2), std::invalid_argument);
}

TEST_CASE("confluence and termination") {
  Engine e(1);
  auto r = check_confluence(e, 6);
  CHECK(r.passed);
  CHECK(r.checked > 0);
  auto t = check_termination(e, 500, 10, 7);
  CHECK(t.passed);
  CHECK(t.checked == 500);
}
