#include <doctest.h>

#include <random>

#include "cqg/builders.hpp"
#include "cqg/comodule.hpp"

using namespace cqg;

namespace {

Scalar q(long a, long b = 1) { return Scalar::gauss(Rational(a, b)); }

Matrix e(std::size_t n, std::size_t k, Backend b = Backend::GaussQ) {
  Matrix v(n, 1, b);
  v(k, 0) = Scalar::one(b);
  return v;
}

Comodule defining(const Coalgebra& c, std::size_t n) { return comodule_from_grid(c, standard_grid(n)); }

// The 2-dimensional irreducible comodule of the functions on S3.
struct S3Rep {
  HopfAlgebra h{function_algebra(symmetric_group3())};
  Comodule v;
  S3Rep() {
    for (const auto& comp : h.components())
      if (comp.n == 2) v = comodule_from_grid(h.coalgebra(), structure_basis(h.coalgebra(), comp));
  }
};

bool all_passed(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace

TEST_CASE("right adjoint") {
  HopfAlgebra z2(group_algebra(cyclic_group(2)));
  Comodule t = trivial_comodule(z2.coalgebra(), z2.unit());
  Comodule l = right_adjoint(t);
  CHECK(l.side == Side::Left);
  CHECK(all_passed(check_comodule(z2.coalgebra(), l)));
  CHECK(l.coeff(0, 0) == z2.unit());

  Coalgebra c = matrix_coalgebra(2);
  Comodule v = defining(c, 2);
  Comodule la = right_adjoint(v);
  CHECK(all_passed(check_comodule(c, la)));
  // sum f_{-1} f_0(v) = sum f(v_0) v_1 on dual basis e^a and basis e_b
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Matrix lhs(4, 1, Backend::GaussQ);
      for (std::size_t i = 0; i < 2; ++i)
        if (i == b) lhs += la.coeff(i, a);
      CHECK(lhs == v.coeff(a, b));
    }
  Comodule back = left_adjoint(la);
  CHECK(back.side == Side::Right);
  for (std::size_t k = 0; k < 4; ++k) CHECK(back.x[k] == v.x[k]);
}

TEST_CASE("conjugate dual") {
  Coalgebra c = matrix_coalgebra(2);
  Comodule v = defining(c, 2);
  Comodule d = circ_dual(c, v);
  CHECK(all_passed(check_comodule(c, d)));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(d.coeff(i, j) == v.coeff(i, j));

  HopfAlgebra z2(group_algebra(cyclic_group(2)));
  Comodule t = trivial_comodule(z2.coalgebra(), z2.unit());
  CHECK(circ_dual(z2.coalgebra(), t).coeff(0, 0) == z2.unit());

  // Coeff(D(V)) = Coeff(V)°
  S3Rep r;
  const Coalgebra& cc = r.h.coalgebra();
  Matrix cd = coefficient_space(circ_dual(cc, r.v));
  Matrix cv = coefficient_space(r.v);
  Matrix img = cc.circ().m.to_backend(Backend::FloatC) * cv.conj();
  CHECK(rank(cd) == 4);
  CHECK(rank(cd.hcat(img)) == 4);
}

TEST_CASE("antipode dual") {
  HopfAlgebra z3(group_algebra(cyclic_group(3)));
  Comodule t = trivial_comodule(z3.coalgebra(), z3.basis_vector(1));
  Comodule d = antipode_dual(z3, t);
  CHECK(d.coeff(0, 0) == z3.basis_vector(2));
  CHECK(antipode_dual(z3, trivial_comodule(z3.coalgebra(), z3.unit())).coeff(0, 0) == z3.unit());

  // a non-diagonal 2-dim comodule over the functions on Z/4
  HopfAlgebra f4(function_algebra(cyclic_group(4)));
  const Coalgebra& c = f4.coalgebra();
  auto chi = [&](long s) {
    Matrix v(4, 1, Backend::GaussQ);
    Scalar w = Scalar::one(Backend::GaussQ), i = Scalar::gauss(0, s);
    for (std::size_t k = 0; k < 4; ++k, w = w * i) v(k, 0) = w;
    return v;
  };
  Matrix p(2, 2, Backend::GaussQ), pi;
  p(0, 0) = q(1);
  p(0, 1) = q(2);
  p(1, 0) = q(1);
  p(1, 1) = q(3);
  pi = inverse(p);
  std::vector<std::vector<Matrix>> grid(2, std::vector<Matrix>(2));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) grid[a][b] = p(a, 0) * pi(0, b) * chi(1) + p(a, 1) * pi(1, b) * chi(-1);
  Comodule v = make_comodule(c, grid);
  Comodule vs = antipode_dual(f4, v);
  CHECK(all_passed(check_comodule(c, vs)));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(vs.coeff(b, a) == f4.antipode() * v.coeff(a, b));
  // Coeff of the antipode dual is S(Coeff V)
  CHECK(rank(coefficient_space(vs).hcat(f4.antipode() * coefficient_space(v))) == coefficient_space(v).cols());
  CHECK_FALSE(is_irreducible(v));
}

TEST_CASE("unitarity of forms") {
  Coalgebra c = matrix_coalgebra(2);
  Comodule v = defining(c, 2);
  CHECK(check_unitary(c, v, Matrix::identity(2, Backend::GaussQ)).unitary);
  Matrix d(2, 2, Backend::GaussQ);
  d(0, 0) = q(1);
  d(1, 1) = q(2);
  auto bad = check_unitary(c, v, d);
  CHECK_FALSE(bad.unitary);
  CHECK(bad.witness == "(e1, e2)");
  auto zero = check_unitary(c, v, Matrix(2, 2, Backend::GaussQ));
  CHECK(zero.unitary);
  CHECK(zero.degenerate);
  // orthonormal basis: T° = T^t
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(c.circ().apply(v.coeff(i, j)) == v.coeff(j, i));
}

TEST_CASE("unitarize") {
  Coalgebra c = matrix_coalgebra(2);
  CHECK(unitarize(c, defining(c, 2), {standard_grid(2)}) == Matrix::identity(2, Backend::GaussQ));
  HopfAlgebra z2(group_algebra(cyclic_group(2)));
  Comodule t = trivial_comodule(z2.coalgebra(), z2.unit());
  CHECK(unitarize(z2.coalgebra(), t) == Matrix::identity(1, Backend::GaussQ));

  S3Rep r;
  const Coalgebra& cc = r.h.coalgebra();
  Comodule triv = trivial_comodule(cc, r.h.unit().to_backend(Backend::FloatC));
  Comodule sum = direct_sum(triv, r.v);
  Matrix b = unitarize(cc, sum);
  CHECK(b.rows() == 3);
  for (std::size_t k = 1; k < 3; ++k) {
    CHECK(b(0, k).abs() < 1e-9);
    CHECK(b(k, 0).abs() < 1e-9);
  }
  CHECK(check_unitary(cc, sum, b).unitary);
  CHECK(is_irreducible(r.v));
  CHECK_FALSE(is_irreducible(sum));
  CHECK(coefficient_space(r.v).cols() == 4);
}

TEST_CASE("orthogonal complement of a subcomodule") {
  S3Rep r;
  const Coalgebra& cc = r.h.coalgebra();
  Comodule sum = direct_sum(trivial_comodule(cc, r.h.unit().to_backend(Backend::FloatC)), r.v);
  // scramble the basis
  Matrix p(3, 3, Backend::FloatC);
  std::mt19937 rng(5);
  std::normal_distribution<double> nd;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) p(i, j) = Scalar::floatc(nd(rng), nd(rng));
  Matrix pi = inverse(p);
  Comodule w = sum;
  for (auto& x : w.x) x = p * x * pi;
  CHECK(all_passed(check_comodule(cc, w)));
  Matrix b = unitarize(cc, w);
  Matrix sub = p.col(0);
  CHECK(is_subcomodule(w, sub));
  Matrix perp = nullspace(sub.adjoint() * b);
  CHECK(perp.cols() == 2);
  CHECK(is_subcomodule(w, perp));
  CHECK_FALSE(is_subcomodule(w, p.col(0) + p.col(1)));
}

TEST_CASE("positive comodule isomorphism") {
  S3Rep r;
  const Coalgebra& cc = r.h.coalgebra();
  Matrix b = unitarize(cc, r.v);
  Matrix gm = unitarize(cc, antipode_dual(r.h, r.v));
  LinOp phi = positive_comodule_iso(r.h, r.v, b, gm);
  auto split = eigensplit(phi);
  REQUIRE(split.size() == 1);  // Schur: S^2 = id
  CHECK(split[0].value.to_complex().real() > 0);
  CHECK(std::abs(split[0].value.to_complex().imag()) < 1e-9);

  HopfAlgebra z3(group_algebra(cyclic_group(3)));
  Comodule t = trivial_comodule(z3.coalgebra(), z3.basis_vector(1));
  Matrix one = Matrix::identity(1, Backend::GaussQ);
  LinOp p1 = positive_comodule_iso(z3, t, q(2) * one, q(3) * one);
  CHECK(p1 == q(6) * one);

  Matrix skew = b;
  skew(1, 1) = skew(1, 1) + Scalar::floatc(1);
  CHECK_THROWS_WITH(positive_comodule_iso(r.h, r.v, skew, gm), "forms not unitary");
}

TEST_CASE("comodule axioms are enforced") {
  Coalgebra c = matrix_coalgebra(2);
  auto g = standard_grid(2);
  std::swap(g[0][1], g[1][0]);
  CHECK_THROWS_AS(make_comodule(c, g), AxiomError);
}

TEST_CASE("JSON round trip") {
  Coalgebra c = matrix_coalgebra(3);
  Comodule v = defining(c, 3);
  Comodule back = comodule_from_json(to_json(v), 9, Backend::GaussQ);
  for (std::size_t k = 0; k < 9; ++k) CHECK(back.x[k] == v.x[k]);
}
