#include <doctest.h>

#include "cqg/builders.hpp"
#include "cqg/report.hpp"

using namespace cqg;

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("report JSON round trip") {
  Report r;
  r.command = "check";
  r.input_digest = fnv1a_hex("x");
  r.add("exact", true, "0");
  r.add("float", false, 1e-3, "e1");
  r.details["n"] = 3;
  r.wall_time = 1.5;
  CHECK_FALSE(r.passed());
  Json j = to_json(r);
  CHECK_FALSE(j.contains("wall_time"));
  Report back = report_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.checks[1].witness == "e1");
}

TEST_CASE("compare") {
  Matrix a = Matrix::identity(2, Backend::GaussQ);
  CHECK(compare("id", a, a, 1e-9).passed);
  Matrix b = a;
  b(0, 1) = Scalar::gauss(1);
  auto r = compare("off", b, a, 1e-9);
  CHECK_FALSE(r.passed);
  CHECK(r.residual > 0);
  CHECK(compare("mixed", a.to_backend(Backend::FloatC), a, 1e-9).passed);
}

TEST_CASE("backend conversion keeps the axioms") {
  HopfData f = to_backend(function_algebra(symmetric_group3()), Backend::FloatC);
  for (const auto& c : check_hopf(f)) CHECK(c.passed);
}

TEST_CASE("corpus") {
  auto c = corpus();
  CHECK(c.size() == 17);
  for (const auto& [name, j] : c) {
    INFO(name);
    if (is_hopf_json(j)) CHECK_NOTHROW(HopfAlgebra(hopf_from_json(j)));
    else CHECK_NOTHROW(Coalgebra(coalgebra_from_json(j)));
  }
}
