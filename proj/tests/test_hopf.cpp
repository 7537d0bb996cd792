#include <doctest.h>

#include <random>

#include "cqg/builders.hpp"

using namespace cqg;

namespace {

Scalar q(long a, long b = 1) { return Scalar::gauss(Rational(a, b)); }

HopfAlgebra trivial_hopf() {
  HopfData h;
  h.coalgebra.backend = Backend::GaussQ;
  h.coalgebra.basis = {"1"};
  h.coalgebra.delta = {{{0, 0, q(1)}}};
  h.coalgebra.eps = {q(1)};
  h.coalgebra.circ = Matrix::identity(1, Backend::GaussQ);
  h.mult = {{{{0, q(1)}}}};
  h.unit = Matrix::identity(1, Backend::GaussQ);
  h.antipode = Matrix::identity(1, Backend::GaussQ);
  return HopfAlgebra(h);
}

std::vector<HopfAlgebra> shipped() {
  std::vector<HopfAlgebra> out;
  for (const auto& g : shipped_groups()) {
    out.emplace_back(group_algebra(g));
    out.emplace_back(function_algebra(g));
  }
  return out;
}

}  // namespace

TEST_CASE("shipped algebras satisfy every axiom exactly") {
  for (const auto& g : shipped_groups())
    for (const auto& d : {group_algebra(g), function_algebra(g)})
      for (const auto& r : check_hopf(d)) {
        INFO(g.name << ": " << r.name << " " << r.witness);
        CHECK(r.passed);
        CHECK(r.residual == 0);
      }
  for (const auto& r : check_hopf(sweedler_h4())) {
    INFO(r.name);
    CHECK(r.passed);
  }
}

TEST_CASE("group tables") {
  CHECK(symmetric_group3().order() == 6);
  CHECK(dihedral_group4().order() == 8);
  auto q8 = quaternion_group();
  CHECK(q8.order() == 8);
  // exactly one element of order 2 in Q8
  int involutions = 0;
  for (std::size_t a = 1; a < 8; ++a)
    if (q8.mul[a][a] == 0) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("integrals") {
  HopfAlgebra z2(group_algebra(cyclic_group(2)));
  const auto& phi = z2.integral();
  CHECK(phi(0, 0) == q(1));
  CHECK(phi(0, 1) == q(0));

  HopfAlgebra s3(function_algebra(symmetric_group3()));
  for (std::size_t k = 0; k < 6; ++k) CHECK(s3.integral()(0, k) == q(1, 6));
  CHECK(integral_via_decomposition(s3) == s3.integral());
  CHECK(integral_via_decomposition(z2) == z2.integral());

  HopfAlgebra h4(sweedler_h4());
  CHECK_THROWS_WITH(solve_integral(h4), doctest::Contains("no normal integral"));
  auto v = is_compact(h4);
  CHECK_FALSE(v.compact);
  CHECK(v.reason.find("no normal integral") != std::string::npos);
}

TEST_CASE("Gram forms") {
  HopfAlgebra z2(group_algebra(cyclic_group(2)));
  CHECK(z2.gram() == Matrix::identity(2, Backend::GaussQ));
  CHECK(trivial_hopf().gram() == Matrix::identity(1, Backend::GaussQ));
  HopfAlgebra z3(function_algebra(cyclic_group(3)));
  CHECK(z3.gram() == q(1, 3) * Matrix::identity(3, Backend::GaussQ));
}

TEST_CASE("compactness of the shipped algebras") {
  for (const auto& h : shipped()) {
    auto v = is_compact(h);
    INFO(h.coalgebra().name(0));
    CHECK(v.compact);
    CHECK(v.min_eigenvalue >= 1.0 / static_cast<double>(h.dim()) - 1e-9);
  }
}

TEST_CASE("perturbed involution is rejected") {
  HopfData d = group_algebra(cyclic_group(2));
  (*d.coalgebra.circ)(1, 1) = q(-1);
  CHECK_THROWS_AS(HopfAlgebra{d}, AxiomError);
}

TEST_CASE("function algebra on S3 splits as 1 + 1 + 4") {
  HopfAlgebra s3(group_algebra(symmetric_group3()));
  // the group algebra is cocommutative: six grouplikes
  CHECK(s3.components().size() == 6);
  HopfAlgebra f(function_algebra(symmetric_group3()));
  std::vector<std::size_t> dims;
  for (const auto& c : f.components()) dims.push_back(c.basis.cols());
  CHECK(dims == std::vector<std::size_t>{1, 1, 4});
}

TEST_CASE("antipode calculus degenerates in finite dimension") {
  for (const auto& h : shipped()) {
    Matrix id = Matrix::identity(h.dim(), h.backend());
    CHECK(approx_equal(positive_antipode(h), id));
    auto nk = nakayama(h);
    CHECK(nk.n == id);
    CHECK(nk.alpha == h.coalgebra().eps_row());
    CHECK(nk.g == h.unit());
    CHECK(approx_equal(nakayama_sqrt(h), id));
    CHECK(approx_equal(unitary_antipode(h), h.antipode()));
    CHECK(antipode_adjoint(h) == h.antipode());
    CHECK(approx_equal(compute_beta(h), h.coalgebra().eps_row()));
    auto m = trivial_antipode_report(h);
    CHECK(m.flags.size() == 8);
    CHECK(m.consistent);
    CHECK(m.all_true());
    auto a = additional_report(h);
    CHECK(a.flags.size() == 5);
    CHECK(a.consistent);
    CHECK(a.all_true());
    for (const auto& r : radford_check(h)) {
      INFO(r.name);
      CHECK(r.residual == 0);
    }
    for (const auto& r : antipode_postconditions(h)) {
      INFO(r.name << " " << r.residual);
      CHECK(r.passed);
    }
  }
  auto t = trivial_hopf();
  CHECK(additional_report(t).all_true());
}

TEST_CASE("Albert on a diagonal automorphism") {
  Coalgebra c = matrix_coalgebra(2);
  // T(t_ij) = (u_i / u_j) t_ij with u = (1, 2)
  Matrix t(4, 4, Backend::GaussQ);
  long u[2] = {1, 2};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) t(i * 2 + j, i * 2 + j) = q(u[i], u[j]);
  auto r = albert_tau(c, t);
  CHECK(r.residual == 0);
  Scalar s = r.tau(0, 0);
  CHECK(r.tau(0, 1) == q(0));
  CHECK(r.tau(0, 2) == q(0));
  CHECK(r.tau(0, 3) == q(2) * s);
  CHECK(conv_left(c, r.tau) * conv_right(c, r.tau_inv) == t);

  auto id = albert_tau(c, Matrix::identity(4, Backend::GaussQ));
  CHECK(id.tau == id.tau(0, 0) * c.eps_row());
}

TEST_CASE("Albert rejects a non-automorphism") {
  Coalgebra c = matrix_coalgebra(2);
  Matrix t(4, 4, Backend::GaussQ);
  t(0, 0) = q(1);
  CHECK_THROWS_WITH(albert_tau(c, t), "automorphism not inner");
}

TEST_CASE("convolution inverse") {
  Coalgebra c = matrix_coalgebra(2);
  Matrix f(1, 4, Backend::GaussQ);
  f(0, 0) = q(1);
  f(0, 1) = q(3);
  f(0, 3) = q(2);
  Matrix g = convolution_inverse(c, f);
  CHECK(dual_product(c, f, g) == c.eps_row());
  CHECK(dual_product(c, g, f) == c.eps_row());
}

TEST_CASE("conjugacy of an involution with itself") {
  HopfAlgebra h(function_algebra(cyclic_group(3)));
  auto r = conjugate_involutions(h, ConjLinOp{h.coalgebra().circ().m});
  CHECK(r.diamond_compact);
  CHECK(approx_equal(r.p, Matrix::identity(3, Backend::FloatC)));
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.passed);
  }
}

TEST_CASE("conjugacy on a matrix coalgebra") {
  std::mt19937 rng(7);
  std::normal_distribution<double> nd;
  const std::size_t n = 2;
  Coalgebra c = matrix_coalgebra(n, Backend::FloatC);
  // random positive u, A(t_ij) = sum u_ik t_kl (u^-1)_lj
  Eigen::MatrixXcd x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = {nd(rng), nd(rng)};
  Eigen::MatrixXcd u = x * x.adjoint() + Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd ui = u.inverse();
  Matrix a(n * n, n * n, Backend::FloatC);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) a(k * n + l, i * n + j) = Scalar(u(i, k) * ui(l, j));
  Matrix m = c.circ().m;
  Matrix diamond = a * m * inverse(a).conj();
  auto r = conjugate_involutions(c, Matrix::identity(n * n, Backend::FloatC), ConjLinOp{diamond}, true);
  for (const auto& ch : r.checks) {
    INFO(ch.name << " " << ch.residual);
    CHECK(ch.passed);
  }
  CHECK(rel_residual(r.p, a) < 1e-8);
}

TEST_CASE("inconsistent involution pair") {
  Coalgebra c = matrix_coalgebra(2, Backend::FloatC);
  Matrix d = Scalar::floatc(0, 1) * Matrix::identity(4, Backend::FloatC);
  CHECK_THROWS_WITH(conjugate_involutions(c, Matrix::identity(4, Backend::FloatC), ConjLinOp{d}, false),
                    "inconsistent involution pair");
}

TEST_CASE("JSON round trip") {
  HopfData d = function_algebra(quaternion_group());
  HopfData back = hopf_from_json(to_json(d));
  CHECK(back.coalgebra.basis == d.coalgebra.basis);
  CHECK(back.antipode == d.antipode);
  CHECK(back.unit == d.unit);
  HopfAlgebra h(back);
  CHECK(is_compact(h).compact);
}
