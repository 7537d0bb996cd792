#include <doctest.h>

#include "cqg/coalgebra.hpp"

using namespace cqg;

namespace {

// Coalgebra of the group algebra of Z/n: Delta g = g (x) g, g° = g^{-1}... as a
// coalgebra only g° = g is needed for a grouplike basis.
Coalgebra cyclic_grouplikes(std::size_t n) {
  CoalgebraData d;
  Matrix circ = Matrix::identity(n, Backend::GaussQ);
  for (std::size_t k = 0; k < n; ++k) {
    d.basis.push_back("g" + std::to_string(k));
    d.delta.push_back({{k, k, Scalar::gauss(1)}});
    d.eps.push_back(Scalar::gauss(1));
  }
  d.circ = circ;
  return Coalgebra(d);
}

// Dual coalgebra of the algebra of functions on Z/n: Delta d_g = sum_h d_h (x) d_{g-h}.
Coalgebra cyclic_functions(std::size_t n) {
  CoalgebraData d;
  Matrix circ(n, n, Backend::GaussQ);
  for (std::size_t g = 0; g < n; ++g) {
    d.basis.push_back("d" + std::to_string(g));
    std::vector<DeltaTerm> terms;
    for (std::size_t h = 0; h < n; ++h) terms.push_back({h, (g + n - h) % n, Scalar::gauss(1)});
    d.delta.push_back(terms);
    d.eps.push_back(Scalar::gauss(g == 0 ? 1 : 0));
    circ((n - g) % n, g) = Scalar::gauss(1);
  }
  d.circ = circ;
  return Coalgebra(d);
}

}  // namespace

TEST_CASE("matrix coalgebra") {
  Coalgebra c1 = matrix_coalgebra(1);
  CHECK(c1.dim() == 1);
  CHECK(c1.delta(0).size() == 1);
  Coalgebra c2 = matrix_coalgebra(2);
  // Delta t11 = t11 (x) t11 + t12 (x) t21
  auto& d = c2.delta(0);
  REQUIRE(d.size() == 2);
  CHECK(d[0].i == 0);
  CHECK(d[0].j == 0);
  CHECK(d[1].i == 1);
  CHECK(d[1].j == 2);
  // t12° = t21
  Matrix t12(4, 1, Backend::GaussQ);
  t12(1, 0) = Scalar::gauss(1);
  CHECK(c2.circ().apply(t12)(2, 0) == Scalar::gauss(1));
  for (std::size_t n = 1; n <= 4; ++n) CHECK(check_grid(matrix_coalgebra(n), standard_grid(n)).passed);
}

TEST_CASE("construction rejects broken tensors") {
  CoalgebraData d = matrix_coalgebra(2).data();
  d.delta[0].pop_back();
  try {
    Coalgebra c(d);
    FAIL("expected AxiomError");
  } catch (const AxiomError& e) {
    CHECK(e.result().name == "coassociativity");
    CHECK(e.result().witness == "t12");
  }
  d = matrix_coalgebra(2).data();
  (*d.circ)(1, 1) = Scalar::gauss(1);
  CHECK_THROWS_AS(Coalgebra{d}, AxiomError);
}

TEST_CASE("decompose grouplikes and matrix coalgebras") {
  auto comps = decompose_simple(cyclic_grouplikes(3));
  CHECK(comps.size() == 3);
  for (auto& c : comps) CHECK(c.basis.cols() == 1);
  comps = decompose_simple(matrix_coalgebra(3));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].n == 3);
  CHECK(comps[0].basis.cols() == 9);
}

TEST_CASE("decomposition needing a float splitting field") {
  auto comps = decompose_simple(cyclic_functions(3));
  REQUIRE(comps.size() == 3);
  CHECK_FALSE(comps[0].basis.is_exact());
  comps = decompose_simple(cyclic_functions(4));
  REQUIRE(comps.size() == 4);
  CHECK(comps[0].basis.is_exact());
}

TEST_CASE("non-cosemisimple coalgebra") {
  // span{g, 1, x} with Delta x = x (x) 1 + g (x) x: a pointed non-cosemisimple coalgebra
  CoalgebraData d;
  d.basis = {"1", "g", "x"};
  d.delta = {{{0, 0, Scalar::gauss(1)}}, {{1, 1, Scalar::gauss(1)}}, {{2, 0, Scalar::gauss(1)}, {1, 2, Scalar::gauss(1)}}};
  d.eps = {Scalar::gauss(1), Scalar::gauss(1), Scalar::gauss(0)};
  CHECK_THROWS_WITH(decompose_simple(Coalgebra(d)), "not cosemisimple at tolerance");
}

TEST_CASE("structure basis of a matrix coalgebra") {
  for (std::size_t n = 1; n <= 3; ++n) {
    Coalgebra c = matrix_coalgebra(n);
    auto comps = decompose_simple(c);
    auto grid = structure_basis(c, comps[0], 3);
    CHECK(grid.size() == n);
    CHECK(check_grid(c, grid).passed);
  }
  Coalgebra f = cyclic_functions(3);
  for (auto& comp : decompose_simple(f)) CHECK(check_grid(f, structure_basis(f, comp)).passed);
}

TEST_CASE("json round trip") {
  CoalgebraData d = matrix_coalgebra(2).data();
  CoalgebraData e = coalgebra_from_json(Json::parse(to_json(d).dump()));
  CHECK(e.basis == d.basis);
  CHECK(*e.circ == *d.circ);
  CHECK(to_json(e) == to_json(d));
}
