#include "cqg/fourier.hpp"

#include <algorithm>

namespace cqg {

namespace {

double gap(const Matrix& a, const Matrix& b) {
  if (a.is_exact() && b.is_exact()) return a == b ? 0.0 : std::max(rel_residual(a, b), 1e-300);
  return rel_residual(a, b);
}

bool ok(double r, Backend b) { return b == Backend::FloatC ? r <= tolerance().residual : r == 0; }

Matrix unit_vec(std::size_t n, std::size_t k, Backend b) {
  Matrix v(n, 1, b);
  v(k, 0) = Scalar::one(b);
  return v;
}

std::string pair(const Coalgebra& c, std::size_t a, std::size_t b) { return "(" + c.name(a) + ", " + c.name(b) + ")"; }

// Both sides of the balance identity at (e_a, e_b).
std::pair<Matrix, Matrix> balance(const Coalgebra& c, const Matrix& w, std::size_t a, std::size_t b) {
  Matrix l(c.dim(), 1, c.backend()), r(c.dim(), 1, c.backend());
  for (const auto& t : c.delta(b)) l(t.j, 0) += w(a, t.i) * t.c;
  for (const auto& t : c.delta(a)) r(t.i, 0) += t.c * w(t.j, b);
  return {l, r};
}

}  // namespace

Matrix FourierProduct::apply(const Matrix& x, const Matrix& y) const {
  const std::size_t n = dim();
  Matrix out(n, 1, x.backend());
  for (std::size_t k = 0; k < n; ++k) out(k, 0) = (x.transpose() * p[k] * y)(0, 0);
  return out;
}

CheckResult check_form(const Coalgebra& c, const FourierForm& f) {
  CheckResult res{"fourier form balance", true, 0, ""};
  const std::size_t n = c.dim();
  if (f.w.rows() != n || f.w.cols() != n) return {res.name, false, 0, "shape"};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto [l, r] = balance(c, f.w, a, b);
      double g = gap(l, r);
      if (!ok(g, c.backend()) && res.witness.empty()) res.witness = pair(c, a, b);
      res.residual = std::max(res.residual, g);
    }
  res.passed = res.witness.empty();
  return res;
}

CheckResult check_product(const Coalgebra& c, const FourierProduct& p) {
  CheckResult res{"fourier product", true, 0, ""};
  const std::size_t n = c.dim();
  if (p.dim() != n) return {res.name, false, 0, "shape"};
  const Backend bk = c.backend();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix cd = p.apply(unit_vec(n, a, bk), unit_vec(n, b, bk));
      Matrix lhs = c.delta_of(cd);
      Matrix m1(n, n, bk), m2(n, n, bk);
      for (const auto& t : c.delta(b)) m1 += t.c * (p.apply(unit_vec(n, a, bk), unit_vec(n, t.i, bk)) * unit_vec(n, t.j, bk).transpose());
      for (const auto& t : c.delta(a)) m2 += t.c * (unit_vec(n, t.i, bk) * p.apply(unit_vec(n, t.j, bk), unit_vec(n, b, bk)).transpose());
      double g = std::max(gap(lhs, m1), gap(lhs, m2));
      if (!ok(g, bk) && res.witness.empty()) res.witness = pair(c, a, b);
      res.residual = std::max(res.residual, g);
    }
  res.passed = res.witness.empty();
  return res;
}

FourierProduct form_to_product(const Coalgebra& c, const FourierForm& f) {
  auto r = check_form(c, f);
  if (!r.passed) throw AxiomError(r);
  const std::size_t n = c.dim();
  FourierProduct out{std::vector<Matrix>(n, Matrix(n, n, c.backend()))};
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& t : c.delta(b))
      for (std::size_t a = 0; a < n; ++a)
        if (!f.w(a, t.i).is_zero()) out.p[t.j](a, b) += f.w(a, t.i) * t.c;
  return out;
}

FourierForm product_to_form(const Coalgebra& c, const FourierProduct& p) {
  auto r = check_product(c, p);
  if (!r.passed) throw AxiomError(r);
  const std::size_t n = c.dim();
  Matrix w(n, n, c.backend());
  for (std::size_t k = 0; k < n; ++k)
    if (!c.eps(k).is_zero()) w += c.eps(k) * p.p[k];
  return {w};
}

std::vector<FourierForm> fourier_form_basis(const Coalgebra& c) {
  const std::size_t n = c.dim();
  const Backend bk = c.backend();
  // unknown w(a, b) at position a * n + b; one equation per (a, b, output k)
  Matrix sys(n * n * n, n * n, bk);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t row = (a * n + b) * n;
      for (const auto& t : c.delta(b)) sys(row + t.j, a * n + t.i) += t.c;
      for (const auto& t : c.delta(a)) sys(row + t.i, t.j * n + b) -= t.c;
    }
  Matrix ns = nullspace(sys);
  std::vector<FourierForm> out;
  for (std::size_t col = 0; col < ns.cols(); ++col) {
    Matrix w(n, n, bk);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) w(a, b) = ns(a * n + b, col);
    out.push_back({w});
  }
  return out;
}

FourierForm integral_form(const HopfAlgebra& h) {
  const Functional& phi = h.integral();
  const std::size_t n = h.dim();
  Matrix w(n, n, h.backend());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) w(a, b) = (phi * h.product(h.antipode().col(a), h.basis_vector(b)))(0, 0);
  return {w};
}

Matrix neutral_element(const Coalgebra& c, const SimpleComponent& comp, const FourierForm& f) {
  Matrix b = comp.basis;
  Matrix w = f.w;
  if (b.backend() != w.backend()) {
    b = b.to_backend(Backend::FloatC);
    w = w.to_backend(Backend::FloatC);
  }
  const Backend bk = b.backend();
  const std::size_t d = b.cols();
  Matrix wd = b.transpose() * w * b;
  if (rank(wd) < d) throw std::domain_error("degenerate restriction");
  Matrix e = (bk == c.backend() ? c.eps_row() : c.eps_row().to_backend(bk)) * b;
  // omega(c, s) = eps(c) and omega(s, c) = eps(c) for c in the component
  Matrix sys = wd.vcat(wd.transpose());
  Matrix rhs = e.transpose().vcat(e.transpose());
  auto x = solve(sys, rhs);
  if (!x) throw std::domain_error("no two-sided neutral element");
  return b * *x;
}

Matrix sesquilinear_matrix(const Coalgebra& c, const FourierForm& f) {
  if (!c.has_circ()) throw std::logic_error("sesquilinear_matrix needs an involution");
  return c.circ().m.transpose() * f.w;
}

FourierFlags classify(const Coalgebra& c, const FourierForm& f) {
  FourierFlags out;
  const std::size_t n = c.dim();
  const Backend bk = c.backend();
  Matrix k = sesquilinear_matrix(c, f);
  Matrix kh = k.adjoint();
  out.hermitian = true;
  for (std::size_t a = 0; a < n && out.hermitian; ++a)
    for (std::size_t b = 0; b < n && out.hermitian; ++b)
      if (!(bk == Backend::FloatC ? (k(a, b) - kh(a, b)).abs() <= tolerance().eq : k(a, b) == kh(a, b))) {
        out.hermitian = false;
        out.witness["hermitian"] = pair(c, b, a);
      }
  if (out.hermitian) {
    auto spec = hermitian_spectrum(k);
    double lo = spec.values.empty() ? 1.0 : spec.values.front();
    out.positive = lo >= -tolerance().eq;
    out.positive_definite = lo > tolerance().eq;
    auto describe = [&](Eigen::Index col) {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) {
        auto z = spec.vectors(static_cast<Eigen::Index>(i), col);
        if (std::abs(z) > 1e-12) s += (s.empty() ? "" : " + ") + Scalar(z).str() + " " + c.name(i);
      }
      return s;
    };
    if (!out.positive) out.witness["positive"] = describe(0);
    if (!out.positive_definite) out.witness["positive_definite"] = describe(0);
  } else {
    out.witness["positive"] = out.witness["positive_definite"] = "not hermitian";
  }
  out.symmetric = true;
  for (std::size_t a = 0; a < n && out.symmetric; ++a)
    for (std::size_t b = 0; b < n && out.symmetric; ++b)
      if (!(bk == Backend::FloatC ? (f.w(a, b) - f.w(b, a)).abs() <= tolerance().eq : f.w(a, b) == f.w(b, a))) {
        out.symmetric = false;
        out.witness["symmetric"] = pair(c, a, b);
      }
  out.normal = true;
  for (std::size_t x = 0; x < n && out.normal; ++x) {
    Scalar s = Scalar::zero(bk);
    for (const auto& t : c.delta(x)) s += t.c * f.w(t.i, t.j);
    if (!(bk == Backend::FloatC ? (s - c.eps(x)).abs() <= tolerance().eq : s == c.eps(x))) {
      out.normal = false;
      out.witness["normal"] = c.name(x);
    }
  }
  return out;
}

Json to_json(const FourierForm& f) { return Json{{"form", to_json(f.w)}}; }

Json to_json(const FourierProduct& p) {
  Json j = Json::array();
  for (const auto& m : p.p) j.push_back(to_json(m));
  return Json{{"product", j}};
}

}  // namespace cqg
