// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "cqg/builders.hpp"
#include "cqg/fourier.hpp"
#include "cqg/report.hpp"
#include "cqg/sumu.hpp"

using namespace cqg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void line(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Shipped {
  std::string name;
  std::size_t order;
  HopfData data;
};

std::vector<Shipped> shipped() {
  std::vector<Shipped> out;
  for (const auto& g : shipped_groups()) {
    out.push_back({"C" + g.name, g.order(), group_algebra(g)});
    out.push_back({"C^" + g.name, g.order(), function_algebra(g)});
  }
  return out;
}

Matrix random_float(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd e(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) e(i, j) = {nd(rng), nd(rng)};
  return Matrix::from_eigen(e);
}

Matrix random_pd(std::size_t n, std::mt19937_64& rng) {
  Matrix x = random_float(n, n, rng);
  return x.adjoint() * x + Scalar::floatc(static_cast<double>(n)) * Matrix::identity(n, Backend::FloatC);
}

// T(t_ij) = sum_kl u_ik t_kl (u^-1)_lj on matrix_coalgebra(n)
Matrix inner_automorphism(const Eigen::MatrixXcd& u, std::size_t n) {
  Eigen::MatrixXcd ui = u.inverse();
  Matrix t(n * n, n * n, Backend::FloatC);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t(k * n + l, i * n + j) = Scalar(u(i, k) * ui(l, j));
  return t;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void axiom_suite() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string bad;
  std::size_t n = 0;
  for (const auto& s : shipped())
    for (const auto& r : check_hopf(s.data)) {
      ++n;
      if (!r.passed || r.residual != 0) {
        ok = false;
        if (bad.empty()) bad = " first failure " + s.name + " " + r.name + " " + r.witness;
      }
    }
  double dt = seconds_since(t0);
  line(1, "axiom suite", ok && dt < 10, std::to_string(n) + " exact checks on 12 algebras in " + fmt(dt) + " s" + bad);
}

void compactness() {
  bool ok = true;
  std::string detail;
  double worst = 1e9;
  for (const auto& s : shipped()) {
    auto v = is_compact(HopfAlgebra(s.data));
    double margin = v.min_eigenvalue - (1.0 / static_cast<double>(s.order) - 1e-9);
    worst = std::min(worst, margin);
    if (!v.compact || margin < 0) {
      ok = false;
      detail += " " + s.name + ":" + v.reason;
    }
  }
  auto h4 = is_compact(HopfAlgebra(sweedler_h4()));
  bool h4_ok = !h4.compact && h4.reason.find("no normal integral") != std::string::npos;
  line(2, "compactness", ok && h4_ok,
       "12 compact, min eigenvalue margin over 1/|G| " + fmt(worst) + "; H4: " + h4.reason + detail);
}

void degeneracy() {
  bool ok = true;
  std::string bad;
  double worst = 0;
  const double tol = 1e-9;
  for (const auto& s : shipped()) {
    HopfAlgebra h(s.data);
    const Matrix id = Matrix::identity(h.dim(), h.backend());
    Nakayama nk = nakayama(h);
    std::vector<CheckResult> rs{compare("S+ = I", positive_antipode(h), id, tol), compare("N = I", nk.n, id, tol),
                                compare("P = I", nakayama_sqrt(h), id, tol),
                                compare("U = S", unitary_antipode(h), h.antipode(), tol),
                                compare("alpha = eps", nk.alpha, h.coalgebra().eps_row(), tol)};
    for (const auto& r : rs) {
      worst = std::max(worst, r.residual);
      if (!r.passed && bad.empty()) bad = " " + s.name + " " + r.name;
      ok = ok && r.passed;
    }
    for (const auto& b : {trivial_antipode_report(h), additional_report(h)})
      if (!b.consistent || !b.all_true()) {
        ok = false;
        if (bad.empty()) bad = " " + s.name + " battery";
      }
  }
  line(3, "finite-dimensional degeneracy", ok,
       "S+, N, P, U, alpha trivial on 12 algebras, max residual " + fmt(worst) + ", batteries consistent all-true" + bad);
}

void sumu_reproduction() {
  const std::vector<std::string> ids{"s2-theta", "splus", "nakayama", "psqrt", "unitary", "deltaN", "radford"};
  bool ok = true;
  std::string detail;
  for (int sign : {1, -1}) {
    auto t0 = Clock::now();
    sumu::Engine e(sign);
    std::size_t checked = 0;
    for (const auto& id : ids) {
      auto r = sumu::verify(e, id, 6);
      checked += r.checked;
      if (!r.passed) {
        ok = false;
        detail += " " + id + " fails at " + r.witness + ";";
      }
    }
    double dt = seconds_since(t0);
    if (dt >= 60) ok = false;
    detail += std::string(sign > 0 ? " mu=+s^2: " : " mu=-s^2: ") + std::to_string(checked) + " exact checks in " + fmt(dt) + " s;";
  }
  line(4, "SU_mu(2) exact reproduction", ok, "degree 6," + detail);
}

void albert_round_trip() {
  std::mt19937_64 rng(2024);
  double worst = 0;
  bool ok = true;
  std::size_t count = 0;
  for (std::size_t n : {2, 3, 4}) {
    Coalgebra c = matrix_coalgebra(n, Backend::FloatC);
    for (int trial = 0; trial < 100; ++trial) {
      Eigen::MatrixXcd u = random_float(n, n, rng).to_eigen() + 2.0 * Eigen::MatrixXcd::Identity(n, n);
      Matrix t = inner_automorphism(u, n);
      try {
        auto r = albert_tau(c, t);
        double res = rel_residual(conv_left(c, r.tau) * conv_right(c, r.tau_inv), t);
        worst = std::max(worst, res);
        ok = ok && res < 1e-8;
      } catch (const std::exception& ex) {
        ok = false;
        worst = 1;
      }
      ++count;
    }
  }
  line(5, "Albert round trip", ok, std::to_string(count) + " inner automorphisms, n in {2,3,4}, max residual " + fmt(worst));
}

void spectral_kernel() {
  std::mt19937_64 rng(99);
  double sq = 0, pr = 0, un = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial) % 20;
    Matrix g = random_pd(n, rng);
    Matrix a = inverse(g) * random_pd(n, rng);
    Matrix p = positive_sqrt(a, g);
    sq = std::max(sq, rel_residual(p * p, a));
    Matrix x = random_float(n, n, rng);
    Polar pol = polar_right(x, g);
    pr = std::max(pr, rel_residual(pol.u * pol.p, x));
    un = std::max(un, rel_residual(gram_adjoint(pol.u, g) * pol.u, Matrix::identity(n, Backend::FloatC)));
  }
  line(6, "spectral kernel", sq < 1e-10 && pr < 1e-9 && un < 1e-9,
       "200 operators n<=20: sqrt residual " + fmt(sq) + ", polar " + fmt(pr) + ", unitary " + fmt(un));
}

void fourier_bijection() {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  bool exact = true, assoc = true;
  std::size_t triples = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    Coalgebra c = matrix_coalgebra(n);
    auto basis = fourier_form_basis(c);
    const std::size_t dim = c.dim();
    auto random_form = [&] {
      Matrix w(dim, dim, Backend::GaussQ);
      for (const auto& f : basis) w += Scalar::gauss(d(rng), d(rng)) * f.w;
      return FourierForm{w};
    };
    FourierForm f1 = random_form(), f2 = random_form();
    auto p1 = form_to_product(c, f1), p2 = form_to_product(c, f2);
    exact = exact && product_to_form(c, p1).w == f1.w && product_to_form(c, p2).w == f2.w;
    for (const auto& f : basis) exact = exact && product_to_form(c, form_to_product(c, f)).w == f.w;
    auto e = [&](std::size_t k) {
      Matrix v(dim, 1, Backend::GaussQ);
      v(k, 0) = Scalar::one(Backend::GaussQ);
      return v;
    };
    for (std::size_t x = 0; x < dim; ++x)
      for (std::size_t y = 0; y < dim; ++y) {
        Matrix xy = p1.apply(e(x), e(y));
        for (std::size_t z = 0; z < dim; ++z) {
          ++triples;
          if (!(p1.apply(e(x), p2.apply(e(y), e(z))) == p2.apply(xy, e(z)))) assoc = false;
        }
      }
  }
  line(7, "Fourier bijection", exact && assoc,
       std::string("round trip bit-exact ") + (exact ? "yes" : "no") + " on n<=4; mixed associativity on " +
           std::to_string(triples) + " basis triples " + (assoc ? "holds" : "fails"));
}

void involution_conjugacy() {
  std::mt19937_64 rng(8);
  double worst = 0, p4 = 0, dp = 0;
  bool ok = true;
  int pairs = 0;
  for (std::size_t n : {2, 3, 4})
    for (int trial = 0; trial < 5; ++trial) {
      Coalgebra c = matrix_coalgebra(n, Backend::FloatC);
      Eigen::MatrixXcd x = random_float(n, n, rng).to_eigen();
      Eigen::MatrixXcd u = x * x.adjoint() + Eigen::MatrixXcd::Identity(n, n);
      Matrix a = inner_automorphism(u, n);  // positive for the standard Gram form
      Matrix m = c.circ().m;
      Matrix diamond = a * m * inverse(a).conj();
      try {
        auto r = conjugate_involutions(c, Matrix::identity(n * n, Backend::FloatC), ConjLinOp{diamond}, true);
        Matrix pinv = inverse(r.p);
        worst = std::max(worst, rel_residual(r.p * m * pinv.conj(), diamond));
        Matrix p2 = r.p * r.p;
        p4 = std::max(p4, rel_residual(p2 * p2, r.q * r.q));
        dp = std::max(dp, rel_residual(diamond * r.p.conj(), pinv * diamond));
        for (const auto& ch : r.checks) ok = ok && ch.passed;
      } catch (const std::exception& ex) {
        std::printf("  pair n=%zu trial %d: %s\n", n, trial, ex.what());
        ok = false;
        worst = 1;
      }
      ++pairs;
    }
  line(8, "involution conjugacy", ok && worst < 1e-8 && p4 < 1e-8 && dp < 1e-8,
       std::to_string(pairs) + " synthetic pairs on matrix coalgebras n in {2,3,4}: |D - P o P^-1| " + fmt(worst) +
           ", P^4 = Q^2 " + fmt(p4) + ", D P = P^-1 D " + fmt(dp));
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  axiom_suite();
  compactness();
  degeneracy();
  sumu_reproduction();
  albert_round_trip();
  spectral_kernel();
  fourier_bijection();
  involution_conjugacy();
  std::printf("%d of 8 criteria failed (%.1f s)\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
