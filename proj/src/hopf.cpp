#include "cqg/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cqg {

namespace {

constexpr double kTiny = 1e-300;

Matrix F(const Matrix& m) { return m.backend() == Backend::FloatC ? m : m.to_backend(Backend::FloatC); }

double diff(const Matrix& a, const Matrix& b) {
  if (a.is_exact() && b.is_exact() && a.backend() == b.backend()) return a == b ? 0.0 : std::max(rel_residual(a, b), kTiny);
  return rel_residual(F(a), F(b));
}

bool passes(double r, bool exact) { return exact ? r == 0 : r <= tolerance().residual; }

Residual make_residual(std::string name, double r, bool exact) { return {std::move(name), r, passes(r, exact)}; }

// Accumulates per-element residuals into a CheckResult with the first failing witness.
class Acc {
 public:
  Acc(std::string name, bool exact) : r_{std::move(name), true, 0, ""}, exact_(exact) {}
  void add(double r, const std::string& witness) {
    if (!passes(r, exact_) && r_.witness.empty()) r_.witness = witness;
    r_.residual = std::max(r_.residual, r);
  }
  CheckResult done() {
    r_.passed = r_.witness.empty();
    return r_;
  }

 private:
  CheckResult r_;
  bool exact_;
};

Matrix basis_vec(std::size_t n, std::size_t k, Backend b) {
  Matrix v(n, 1, b);
  v(k, 0) = Scalar::one(b);
  return v;
}

Matrix data_product(const HopfData& h, const Matrix& x, const Matrix& y) {
  const std::size_t n = h.dim();
  const Backend b = h.coalgebra.backend;
  Matrix out(n, 1, b);
  for (std::size_t i = 0; i < n; ++i) {
    if (x(i, 0).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y(j, 0).is_zero()) continue;
      Scalar xy = x(i, 0) * y(j, 0);
      for (const auto& t : h.mult[i][j]) out(t.k, 0) += xy * t.c;
    }
  }
  return out;
}

Matrix data_delta(const HopfData& h, const Matrix& x) {
  const std::size_t n = h.dim();
  Matrix out(n, n, h.coalgebra.backend);
  for (std::size_t k = 0; k < n; ++k) {
    if (x(k, 0).is_zero()) continue;
    for (const auto& t : h.coalgebra.delta[k]) out(t.i, t.j) += x(k, 0) * t.c;
  }
  return out;
}

// Product of two tensors in H (x) H, given as matrices of coefficients.
Matrix tensor_product(const HopfData& h, const Matrix& a, const Matrix& b) {
  const std::size_t n = h.dim();
  Matrix out(n, n, h.coalgebra.backend);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (b(k, l).is_zero()) continue;
          Scalar c = a(i, j) * b(k, l);
          for (const auto& p : h.mult[i][k])
            for (const auto& q : h.mult[j][l]) out(p.k, q.k) += c * p.c * q.c;
        }
    }
  return out;
}

std::string triple(const HopfData& h, std::size_t i, std::size_t j) {
  return "(" + h.coalgebra.basis[i] + ", " + h.coalgebra.basis[j] + ")";
}

}  // namespace

// ---------------------------------------------------------------- checks

CheckResult check_hopf_shape(const HopfData& h) {
  const std::size_t n = h.dim();
  const Backend b = h.coalgebra.backend;
  auto fail = [](std::string w) { return CheckResult{"hopf shape", false, 0, std::move(w)}; };
  if (h.mult.size() != n) return fail("mult has wrong size");
  for (const auto& row : h.mult) {
    if (row.size() != n) return fail("mult has wrong size");
    for (const auto& terms : row)
      for (const auto& t : terms)
        if (t.k >= n || t.c.backend() != b) return fail("mult entry out of range or wrong backend");
  }
  if (h.unit.rows() != n || h.unit.cols() != 1 || h.unit.backend() != b) return fail("unit shape");
  if (h.antipode.rows() != n || h.antipode.cols() != n || h.antipode.backend() != b) return fail("antipode shape");
  return {"hopf shape", true, 0, ""};
}

CheckResult check_associative(const HopfData& h) {
  const std::size_t n = h.dim();
  const Backend b = h.coalgebra.backend;
  Acc acc("associativity", b != Backend::FloatC);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix ij = data_product(h, basis_vec(n, i, b), basis_vec(n, j, b));
      for (std::size_t k = 0; k < n; ++k) {
        Matrix l = data_product(h, ij, basis_vec(n, k, b));
        Matrix r = data_product(h, basis_vec(n, i, b), data_product(h, basis_vec(n, j, b), basis_vec(n, k, b)));
        acc.add(diff(l, r), "(" + h.coalgebra.basis[i] + ", " + h.coalgebra.basis[j] + ", " + h.coalgebra.basis[k] + ")");
      }
    }
  return acc.done();
}

CheckResult check_unit(const HopfData& h) {
  const std::size_t n = h.dim();
  const Backend b = h.coalgebra.backend;
  Acc acc("unit", b != Backend::FloatC);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix e = basis_vec(n, j, b);
    acc.add(std::max(diff(data_product(h, h.unit, e), e), diff(data_product(h, e, h.unit), e)), h.coalgebra.basis[j]);
  }
  return acc.done();
}

CheckResult check_delta_multiplicative(const HopfData& h) {
  const std::size_t n = h.dim();
  const Backend b = h.coalgebra.backend;
  Acc acc("delta multiplicative", b != Backend::FloatC);
  acc.add(diff(data_delta(h, h.unit), h.unit * h.unit.transpose()), "unit");
  std::vector<Matrix> deltas;
  for (std::size_t i = 0; i < n; ++i) deltas.push_back(data_delta(h, basis_vec(n, i, b)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = data_delta(h, data_product(h, basis_vec(n, i, b), basis_vec(n, j, b)));
      acc.add(diff(l, tensor_product(h, deltas[i], deltas[j])), triple(h, i, j));
    }
  return acc.done();
}

CheckResult check_eps_multiplicative(const HopfData& h) {
  const std::size_t n = h.dim();
  const Backend b = h.coalgebra.backend;
  Acc acc("eps multiplicative", b != Backend::FloatC);
  Matrix eps(1, n, b);
  for (std::size_t k = 0; k < n; ++k) eps(0, k) = h.coalgebra.eps[k];
  acc.add(diff(eps * h.unit, Matrix::identity(1, b)), "unit");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = eps * data_product(h, basis_vec(n, i, b), basis_vec(n, j, b));
      Matrix r(1, 1, b);
      r(0, 0) = h.coalgebra.eps[i] * h.coalgebra.eps[j];
      acc.add(diff(l, r), triple(h, i, j));
    }
  return acc.done();
}

CheckResult check_antipode(const HopfData& h) {
  const std::size_t n = h.dim();
  const Backend b = h.coalgebra.backend;
  Acc acc("antipode", b != Backend::FloatC);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix l(n, 1, b), r(n, 1, b);
    for (const auto& t : h.coalgebra.delta[k]) {
      l += t.c * data_product(h, h.antipode.col(t.i), basis_vec(n, t.j, b));
      r += t.c * data_product(h, basis_vec(n, t.i, b), h.antipode.col(t.j));
    }
    Matrix expect = h.coalgebra.eps[k] * h.unit;
    acc.add(std::max(diff(l, expect), diff(r, expect)), h.coalgebra.basis[k]);
  }
  return acc.done();
}

CheckResult check_circ_multiplicative(const HopfData& h) {
  const std::size_t n = h.dim();
  const Backend b = h.coalgebra.backend;
  Acc acc("circ multiplicative", b != Backend::FloatC);
  if (!h.coalgebra.circ) return acc.done();
  const Matrix& m = *h.coalgebra.circ;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = m * data_product(h, basis_vec(n, i, b), basis_vec(n, j, b)).conj();
      acc.add(diff(l, data_product(h, m.col(i), m.col(j))), triple(h, i, j));
    }
  return acc.done();
}

CheckResult check_circ_unit(const HopfData& h) {
  Acc acc("circ unit", h.coalgebra.backend != Backend::FloatC);
  if (h.coalgebra.circ) acc.add(diff(*h.coalgebra.circ * h.unit.conj(), h.unit), "unit");
  return acc.done();
}

CheckResult check_circ_antipode(const HopfData& h) {
  Acc acc("circ antipode", h.coalgebra.backend != Backend::FloatC);
  if (!h.coalgebra.circ) return acc.done();
  const Matrix& m = *h.coalgebra.circ;
  // S o S o, as a linear map, is S M conj(S) conj(M)
  Matrix sc = h.antipode * m * h.antipode.conj() * m.conj();
  Matrix id = Matrix::identity(h.dim(), h.coalgebra.backend);
  for (std::size_t j = 0; j < h.dim(); ++j) acc.add(diff(sc.col(j), id.col(j)), h.coalgebra.basis[j]);
  return acc.done();
}

std::vector<CheckResult> check_hopf(const HopfData& h) {
  std::vector<CheckResult> out = check_coalgebra(h.coalgebra);
  if (!out.front().passed) return out;
  out.push_back(check_hopf_shape(h));
  if (!out.back().passed) return out;
  for (auto f : {check_associative, check_unit, check_delta_multiplicative, check_eps_multiplicative, check_antipode})
    out.push_back(f(h));
  if (h.coalgebra.circ)
    for (auto f : {check_circ_multiplicative, check_circ_unit, check_circ_antipode}) out.push_back(f(h));
  return out;
}

// ---------------------------------------------------------------- convolution

LinOp conv_left(const Coalgebra& c, const Functional& f) {
  Matrix out(c.dim(), c.dim(), c.backend());
  for (std::size_t k = 0; k < c.dim(); ++k)
    for (const auto& t : c.delta(k))
      if (!f(0, t.i).is_zero()) out(t.j, k) += t.c * f(0, t.i);
  return out;
}

LinOp conv_right(const Coalgebra& c, const Functional& f) {
  Matrix out(c.dim(), c.dim(), c.backend());
  for (std::size_t k = 0; k < c.dim(); ++k)
    for (const auto& t : c.delta(k))
      if (!f(0, t.j).is_zero()) out(t.i, k) += t.c * f(0, t.j);
  return out;
}

Functional convolution_inverse(const Coalgebra& c, const Functional& f) {
  const std::size_t n = c.dim();
  // (f v)(e_k) = sum c f_i v_j
  Matrix l(n, n, c.backend());
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta(k))
      if (!f(0, t.i).is_zero()) l(k, t.j) += t.c * f(0, t.i);
  if (rank(l) < n) throw std::domain_error("functional is not convolution invertible");
  auto v = solve(l, c.eps_row().transpose());
  if (!v) throw std::domain_error("functional is not convolution invertible");
  return v->transpose();
}

Coalgebra subcoalgebra(const Coalgebra& c0, const Matrix& b) {
  Coalgebra c = c0.backend() == b.backend() ? c0 : c0.to_backend(b.backend());
  const std::size_t d = b.cols();
  Matrix bp = inverse(b.adjoint() * b) * b.adjoint();
  CoalgebraData out;
  out.backend = b.backend();
  out.delta.resize(d);
  for (std::size_t a = 0; a < d; ++a) {
    out.basis.push_back("b" + std::to_string(a));
    Matrix y = bp * c.delta_of(b.col(a)) * bp.transpose();
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q)
        if (!y(p, q).is_zero()) out.delta[a].push_back({p, q, y(p, q)});
  }
  Matrix e = c.eps_row() * b;
  for (std::size_t a = 0; a < d; ++a) out.eps.push_back(e(0, a));
  if (c.has_circ()) {
    Matrix image = c.circ().m * b.conj();
    Matrix coords = bp * image;
    if (approx_equal(b * coords, image)) out.circ = coords;
  }
  return Coalgebra(std::move(out));
}

// ---------------------------------------------------------------- HopfAlgebra

namespace {
HopfData validated(HopfData d) {
  for (auto& r : check_hopf(d))
    if (!r.passed) throw AxiomError(std::move(r));
  return d;
}
}  // namespace

HopfAlgebra::HopfAlgebra(HopfData d)
    : d_(validated(std::move(d))), coalg_(d_.coalgebra), cache_(std::make_shared<Cache>()) {}

Matrix HopfAlgebra::product(const Matrix& x, const Matrix& y) const { return data_product(d_, x, y); }

LinOp HopfAlgebra::left_mult(const Matrix& x) const {
  Matrix out(dim(), dim(), backend());
  for (std::size_t j = 0; j < dim(); ++j) out.set_col(j, product(x, basis_vector(j)));
  return out;
}

Matrix HopfAlgebra::basis_vector(std::size_t k) const { return basis_vec(dim(), k, backend()); }

HopfAlgebra HopfAlgebra::with_circ(const Matrix& circ) const {
  HopfData d = d_;
  d.coalgebra.circ = circ.backend() == backend() ? circ : circ.to_backend(backend());
  return HopfAlgebra(std::move(d));
}

const Functional& HopfAlgebra::integral() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->integral) cache_->integral = solve_integral(*this);
  return *cache_->integral;
}

const Matrix& HopfAlgebra::gram() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->gram) return *cache_->gram;
  }
  Matrix g = gram_from_integral(*this);
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gram) cache_->gram = std::move(g);
  return *cache_->gram;
}

const std::vector<SimpleComponent>& HopfAlgebra::components() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->components) cache_->components = decompose_simple(coalg_);
  return *cache_->components;
}

// ---------------------------------------------------------------- integrals

Functional solve_integral(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Backend b = h.backend();
  const Coalgebra& c = h.coalgebra();
  const Matrix& u = h.unit();
  Matrix sys(2 * n * n, n, b);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& t : c.delta(k)) {
      sys(k * n + t.j, t.i) += t.c;          // sum phi(x_1) x_2
      sys(n * n + k * n + t.i, t.j) += t.c;  // sum phi(x_2) x_1
    }
    for (std::size_t l = 0; l < n; ++l) {
      sys(k * n + l, k) -= u(l, 0);
      sys(n * n + k * n + l, k) -= u(l, 0);
    }
  }
  Matrix ns = nullspace(sys);
  if (ns.cols() > 1) throw std::domain_error("integral not unique");
  if (ns.cols() == 0) throw std::domain_error("no normal integral (not cosemisimple)");
  Functional phi = ns.transpose();
  Scalar at_one = (phi * u)(0, 0);
  if (at_one.is_zero()) throw std::domain_error("no normal integral (not cosemisimple)");
  return (Scalar::one(b) / at_one) * phi;
}

Functional integral_via_decomposition(const HopfAlgebra& h) {
  const auto& comps = h.components();
  Backend b = comps.front().basis.backend();
  Matrix all(h.dim(), 0, b);
  std::size_t trivial = comps.size(), offset = 0, at = 0;
  Matrix u = h.unit().to_backend(b);
  for (const auto& comp : comps) {
    if (comp.basis.cols() == 1 && rank(comp.basis.hcat(u)) == 1) {
      trivial = comp.index;
      at = offset;
    }
    all = all.hcat(comp.basis);
    offset += comp.basis.cols();
  }
  if (trivial == comps.size()) throw std::domain_error("no component spanned by the unit");
  // phi(x) = coefficient of 1 in the trivial-component projection of x
  Matrix coords = inverse(all);
  const Matrix& tb = comps[trivial].basis;
  std::size_t p = 0;
  while (tb(p, 0).is_zero()) ++p;
  Scalar lambda = tb(p, 0) / u(p, 0);  // tb = lambda * 1
  Functional phi(1, h.dim(), b);
  for (std::size_t k = 0; k < h.dim(); ++k) phi(0, k) = coords(at, k) * lambda;
  return phi;
}

Matrix gram_from_integral(const HopfAlgebra& h) {
  if (!h.has_circ()) throw std::logic_error("gram_from_integral needs an involution");
  const Functional& phi = h.integral();
  const std::size_t n = h.dim();
  const Matrix& m = h.coalgebra().circ().m;
  Matrix g(n, n, h.backend());
  for (std::size_t bb = 0; bb < n; ++bb) {
    Matrix sb = h.antipode() * m.col(bb);
    for (std::size_t a = 0; a < n; ++a) g(bb, a) = (phi * h.product(sb, h.basis_vector(a)))(0, 0);
  }
  return g;
}

CompactVerdict is_compact(const HopfAlgebra& h) {
  CompactVerdict v;
  if (!h.has_circ()) {
    v.reason = "no involution";
    return v;
  }
  Matrix g;
  try {
    g = h.gram();
  } catch (const std::domain_error& e) {
    v.reason = e.what();
    return v;
  }
  auto spec = hermitian_spectrum(g);
  v.eigenvalues = spec.values;
  v.min_eigenvalue = spec.values.front();
  if (!approx_equal(g, g.adjoint())) {
    v.reason = "Gram form not hermitian";
    return v;
  }
  if (v.min_eigenvalue <= tolerance().eq) {
    v.reason = "Gram form not positive definite";
    v.witness = Matrix::from_eigen(spec.vectors.col(0));
    return v;
  }
  v.compact = true;
  return v;
}

// ---------------------------------------------------------------- antipode calculus

namespace {

void require_compact(const HopfAlgebra& h) {
  auto v = is_compact(h);
  if (!v.compact) throw std::domain_error("not compact: " + v.reason);
}

LinOp sqrt_any(const LinOp& a, const Matrix& g) {
  if (a.is_exact()) {
    try {
      return positive_sqrt(a, g);
    } catch (const std::domain_error& e) {
      std::string msg = e.what();
      if (msg == "operator not positive" || msg == "operator not self-adjoint" || msg.rfind("degenerate", 0) == 0) throw;
    }
  }
  return positive_sqrt(F(a), F(g));
}

Matrix ident(const HopfAlgebra& h) { return Matrix::identity(h.dim(), h.backend()); }

}  // namespace

LinOp positive_antipode(const HopfAlgebra& h) {
  require_compact(h);
  const LinOp& s = h.antipode();
  try {
    return sqrt_any(s * s, h.gram());
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string("internal consistency: S^2 is not positive (") + e.what() + ")");
  }
}

Nakayama nakayama(const HopfAlgebra& h) {
  const Functional& phi = h.integral();
  const std::size_t n = h.dim();
  const Backend b = h.backend();
  Matrix bm(n, n, b);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bm(i, j) = (phi * h.product(h.basis_vector(i), h.basis_vector(j)))(0, 0);
  Matrix binv;
  try {
    binv = inverse(bm);
  } catch (const std::domain_error&) {
    throw std::domain_error("degenerate integral form");
  }
  Nakayama out;
  out.n = binv * bm.transpose();
  out.alpha = h.coalgebra().eps_row() * out.n;
  // sum x_1 phi(x_2) = phi(x) g
  std::size_t k0 = n;
  for (std::size_t k = 0; k < n && k0 == n; ++k)
    if (!phi(0, k).is_zero()) k0 = k;
  auto lhs = [&](std::size_t k) {
    Matrix v(n, 1, b);
    for (const auto& t : h.coalgebra().delta(k)) v(t.i, 0) += t.c * phi(0, t.j);
    return v;
  };
  out.g = (Scalar::one(b) / phi(0, k0)) * lhs(k0);
  for (std::size_t k = 0; k < n; ++k)
    if (!approx_equal(lhs(k), phi(0, k) * out.g)) throw std::domain_error("no distinguished grouplike");
  return out;
}

LinOp nakayama_sqrt(const HopfAlgebra& h) {
  require_compact(h);
  return sqrt_any(nakayama(h).n, h.gram());
}

AlbertResult albert_tau(const Coalgebra& d, const LinOp& t) {
  const std::size_t n = d.dim();
  const Backend b = d.backend();
  if (t.backend() != b) throw BackendMismatch(b, t.backend());
  auto left = [&](const Matrix& f) {  // v -> f v
    Matrix l(n, n, b);
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& x : d.delta(k))
        if (!f(0, x.i).is_zero()) l(k, x.j) += x.c * f(0, x.i);
    return l;
  };
  auto right = [&](const Matrix& f) {  // v -> v f
    Matrix r(n, n, b);
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& x : d.delta(k))
        if (!f(0, x.j).is_zero()) r(k, x.i) += x.c * f(0, x.j);
    return r;
  };
  Matrix sys(0, n, b);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix ej(1, n, b);
    ej(0, j) = Scalar::one(b);
    Matrix block = left(ej * t) - right(ej);
    sys = sys.rows() == 0 ? block : sys.vcat(block);
  }
  Matrix ns = nullspace(sys);
  if (ns.cols() == 0) throw std::domain_error("automorphism not inner");
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    Functional tau = ns.col(c).transpose();
    try {
      Functional inv = convolution_inverse(d, tau);
      Matrix re = conv_left(d, tau) * conv_right(d, inv);
      return {tau, inv, rel_residual(re, t)};
    } catch (const std::domain_error&) {
    }
  }
  throw std::domain_error("automorphism not inner");
}

Functional compute_beta(const HopfAlgebra& h) {
  require_compact(h);
  const std::size_t n = h.dim();
  LinOp splus = F(positive_antipode(h));
  Functional alpha = F(nakayama(h).alpha);
  const auto& comps = h.components();
  Coalgebra cf = h.coalgebra().to_backend(Backend::FloatC);
  Matrix all(n, 0, Backend::FloatC);
  for (const auto& comp : comps) all = all.hcat(F(comp.basis));
  Matrix coords = inverse(all);
  Functional beta(1, n, Backend::FloatC);
  std::size_t offset = 0;
  for (const auto& comp : comps) {
    Matrix bb = F(comp.basis);
    const std::size_t d = bb.cols();
    Coalgebra dc = subcoalgebra(cf, bb);
    Matrix bp = inverse(bb.adjoint() * bb) * bb.adjoint();
    AlbertResult ar = albert_tau(dc, bp * splus * bb);
    Functional tau = ar.tau;
    // phase: make the spectrum of tau * id positive
    auto spec = eigensplit(conv_left(dc, tau));
    FloatC lam = spec.front().value.to_complex();
    tau = Scalar(std::conj(lam) / std::abs(lam)) * tau;
    for (const auto& es : eigensplit(conv_left(dc, tau))) {
      FloatC v = es.value.to_complex();
      if (v.real() <= 0 || std::abs(v.imag()) > 1e-8 * std::abs(v))
        throw std::domain_error("internal consistency: tau * id is not positive");
    }
    // scale so that beta^4 = alpha on this component
    Functional t4 = dual_product(dc, dual_product(dc, tau, tau), dual_product(dc, tau, tau));
    Functional a = alpha * bb;
    std::size_t p = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (t4(0, k).abs() > t4(0, p).abs()) p = k;
    FloatC ratio = (a(0, p) / t4(0, p)).to_complex();
    if (ratio.real() <= 0 || std::abs(ratio.imag()) > 1e-8 * std::abs(ratio) ||
        rel_residual(Scalar(ratio) * t4, a) > tolerance().residual)
      throw std::domain_error("internal consistency: alpha is not a positive multiple of tau^4");
    Functional bd = Scalar::floatc(std::pow(ratio.real(), 0.25)) * tau;
    // beta(e_k) = sum over this component's coordinates of e_k
    for (std::size_t k = 0; k < n; ++k) {
      Scalar s = beta(0, k);
      for (std::size_t a2 = 0; a2 < d; ++a2) s += bd(0, a2) * coords(offset + a2, k);
      beta(0, k) = s;
    }
    offset += d;
  }
  return beta;
}

LinOp antipode_adjoint(const HopfAlgebra& h) {
  require_compact(h);
  LinOp ni = inverse(nakayama(h).n);
  return h.antipode() * ni;
}

LinOp unitary_antipode(const HopfAlgebra& h) {
  require_compact(h);
  LinOp sp = positive_antipode(h);
  LinOp pp = nakayama_sqrt(h);
  if (sp.backend() != pp.backend() || sp.backend() != h.backend())
    return F(h.antipode()) * inverse(F(sp)) * inverse(F(pp));
  return h.antipode() * inverse(sp) * inverse(pp);
}

bool Battery::all_true() const {
  return std::all_of(flags.begin(), flags.end(), [](const auto& f) { return f.second; });
}

namespace {
Battery finish(Battery b) {
  b.consistent = std::all_of(b.flags.begin(), b.flags.end(), [&](const auto& f) { return f.second == b.flags.front().second; });
  return b;
}

// Delta(A x) against the tensor of A on the legs of Delta x, flipped when anti.
bool coalgebra_map(const Coalgebra& c, const LinOp& a0, bool anti) {
  Coalgebra cc = c.backend() == a0.backend() ? c : c.to_backend(a0.backend());
  const LinOp& a = a0;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Matrix lhs = cc.delta_of(a.col(k));
    Matrix rhs(c.dim(), c.dim(), a.backend());
    for (const auto& t : cc.delta(k)) {
      if (anti) rhs += t.c * (a.col(t.j) * a.col(t.i).transpose());
      else rhs += t.c * (a.col(t.i) * a.col(t.j).transpose());
    }
    if (!approx_equal(lhs, rhs)) return false;
  }
  return true;
}
}  // namespace

Battery trivial_antipode_report(const HopfAlgebra& h) {
  require_compact(h);
  const LinOp& s = h.antipode();
  const std::size_t n = h.dim();
  Matrix id = ident(h);
  LinOp sstar = antipode_adjoint(h);
  Nakayama nk = nakayama(h);
  Battery b;
  b.flags.emplace_back("S^2 = id", approx_equal(s * s, id));
  b.flags.emplace_back("S+ = id", approx_equal(positive_antipode(h), id));
  b.flags.emplace_back("U = S", approx_equal(unitary_antipode(h), s));
  bool finite = false;
  Matrix pw = s;
  for (std::size_t k = 1; k <= 2 * n && !finite; ++k) {
    if (approx_equal(pw, id)) finite = true;
    pw = pw * s;
  }
  b.flags.emplace_back("S has finite order", finite);
  b.flags.emplace_back("S normal", approx_equal(s * sstar, sstar * s));
  b.flags.emplace_back("S self-adjoint", approx_equal(sstar, s));
  const Functional& phi = h.integral();
  bool central = true;
  for (std::size_t i = 0; i < n && central; ++i)
    for (std::size_t j = 0; j < n && central; ++j) {
      Matrix x = h.basis_vector(i), y = h.basis_vector(j);
      central = approx_equal(phi * h.product(x, y), phi * h.product(y, x));
    }
  b.flags.emplace_back("phi central", central);
  b.flags.emplace_back("N = id", approx_equal(nk.n, id));
  return finish(b);
}

Battery additional_report(const HopfAlgebra& h) {
  require_compact(h);
  const LinOp& s = h.antipode();
  Nakayama nk = nakayama(h);
  Battery b;
  b.flags.emplace_back("S* coalgebra antimorphism", coalgebra_map(h.coalgebra(), antipode_adjoint(h), true));
  b.flags.emplace_back("U coalgebra antimorphism", coalgebra_map(h.coalgebra(), unitary_antipode(h), true));
  b.flags.emplace_back("N comultiplicative", coalgebra_map(h.coalgebra(), nk.n, false));
  b.flags.emplace_back("alpha = eps", approx_equal(nk.alpha, h.coalgebra().eps_row()));
  b.flags.emplace_back("N = S^-2", approx_equal(nk.n, inverse(s * s)));
  return finish(b);
}

std::vector<Residual> radford_check(const HopfAlgebra& h) {
  const Coalgebra& c = h.coalgebra();
  const LinOp& s = h.antipode();
  const bool exact = h.backend() != Backend::FloatC;
  const std::size_t n = h.dim();
  Nakayama nk = nakayama(h);
  Functional ainv = nk.alpha * s;
  LinOp s2 = s * s, sm2 = inverse(s2);
  std::vector<Residual> out;
  bool unimodular = approx_equal(nk.g, h.unit());
  LinOp radford_rhs = conv_left(c, nk.alpha) * conv_right(c, ainv);
  if (unimodular) {
    out.push_back(make_residual("S^4 = (alpha * id)(id * alpha^-1)", diff(s2 * s2, radford_rhs), exact));
  } else {
    Matrix ginv = s * nk.g;
    out.push_back(make_residual("S^4 = g (alpha * id * alpha^-1) g^-1",
                                diff(s2 * s2, h.left_mult(nk.g) * radford_rhs * h.left_mult(ginv)), exact));
  }
  out.push_back(make_residual("N = alpha * S^-2", diff(nk.n, sm2 * conv_left(c, nk.alpha)), exact));
  out.push_back(make_residual("N^-1 = alpha^-1 * S^2", diff(inverse(nk.n), s2 * conv_left(c, ainv)), exact));
  double dn = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix rhs(n, n, h.backend());
    for (const auto& t : c.delta(k)) rhs += t.c * (nk.n.col(t.i) * sm2.col(t.j).transpose());
    dn = std::max(dn, diff(c.delta_of(nk.n.col(k)), rhs));
  }
  out.push_back(make_residual("Delta N = (N (x) S^-2) Delta", dn, exact));
  if (h.has_circ()) {
    try {
      const Matrix& g = h.gram();
      const Matrix& m = c.circ().m;
      double f2 = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t bb = 0; bb < n; ++bb) {
          Matrix lhs(n, 1, h.backend()), rhs(n, 1, h.backend());
          for (const auto& t : c.delta(a)) lhs += (t.c * g(bb, t.j)) * h.basis_vector(t.i);
          for (const auto& t : c.delta(bb)) rhs += (t.c.conj() * g(t.j, a)) * (s2 * m.col(t.i));
          f2 = std::max(f2, diff(lhs, rhs));
        }
      out.push_back(make_residual("x_1 <x_2, y> = S^2(y_1°) <x, y_2>", f2, exact));
    } catch (const std::domain_error&) {
    }
  }
  return out;
}

std::vector<Residual> antipode_postconditions(const HopfAlgebra& h) {
  require_compact(h);
  std::vector<Residual> out;
  const std::size_t n = h.dim();
  const Coalgebra& c = h.coalgebra();
  const Matrix& g = h.gram();
  const LinOp& s = h.antipode();
  const Matrix& m = c.circ().m;
  const Functional& phi = h.integral();
  auto add = [&](std::string name, double r, bool exact) { out.push_back(make_residual(std::move(name), r, exact)); };
  auto is_exact = [](const Matrix& a) { return a.is_exact(); };

  // product of two vectors in float, through the structure constants
  auto fprod = [&](const Matrix& x, const Matrix& y) {
    Matrix acc(n, 1, Backend::FloatC);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Scalar w = x(p, 0) * y(q, 0);
        if (w.is_zero()) continue;
        for (const auto& t : h.data().mult[p][q]) acc(t.k, 0) += w * t.c.to_backend(Backend::FloatC);
      }
    return acc;
  };
  auto algebra_map = [&](const LinOp& a) {
    double r = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix xy = h.product(h.basis_vector(i), h.basis_vector(j));
        if (a.is_exact()) r = std::max(r, diff(a * xy, h.product(a.col(i), a.col(j))));
        else r = std::max(r, diff(a * F(xy), fprod(a.col(i), a.col(j))));
      }
    return r;
  };
  auto coalgebra_res = [&](const LinOp& a) { return coalgebra_map(c, a, false) ? 0.0 : 1.0; };

  LinOp splus = positive_antipode(h);
  add("S+^2 = S^2", diff(splus * splus, is_exact(splus) ? s * s : F(s * s)), is_exact(splus));
  add("S+ multiplicative", algebra_map(splus), is_exact(splus));
  add("S+ comultiplicative", coalgebra_res(splus), false);
  double comp = 0;
  for (const auto& cp : h.components()) {
    Matrix b = F(cp.basis);
    Matrix img = F(splus) * b;
    Matrix bp = inverse(b.adjoint() * b) * b.adjoint();
    comp = std::max(comp, rel_residual(b * (bp * img), img));
  }
  add("S+ preserves simple components", comp, false);
  double s2c = 0;
  for (const auto& cp : h.components()) {
    Matrix b = F(cp.basis);
    Matrix img = F(s * s) * b;
    Matrix bp = inverse(b.adjoint() * b) * b.adjoint();
    s2c = std::max(s2c, rel_residual(b * (bp * img), img));
  }
  add("S^2 preserves simple components", s2c, false);

  Nakayama nk = nakayama(h);
  add("N self-adjoint", diff(g * nk.n, nk.n.adjoint() * g), is_exact(nk.n));
  auto spec = hermitian_spectrum(g * nk.n);
  add("N positive", spec.values.front() > tolerance().eq ? 0.0 : 1.0, false);
  add("N commutes with circ", diff(nk.n * m, m * nk.n.conj()), is_exact(nk.n));

  LinOp pp = nakayama_sqrt(h);
  add("P^2 = N", diff(pp * pp, is_exact(pp) ? nk.n : F(nk.n)), is_exact(pp));
  add("P multiplicative", algebra_map(pp), is_exact(pp));
  add("P S+ = S+ P", diff(F(pp) * F(splus), F(splus) * F(pp)), false);

  Functional beta = compute_beta(h);
  Coalgebra cf = c.to_backend(Backend::FloatC);
  add("beta = beta S+", diff(beta * F(splus), beta), false);
  double mult = diff(beta * F(h.unit()), Matrix::identity(1, Backend::FloatC));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix v = beta * F(h.product(h.basis_vector(i), h.basis_vector(j)));
      Matrix w(1, 1, Backend::FloatC);
      w(0, 0) = beta(0, i) * beta(0, j);
      mult = std::max(mult, diff(v, w));
    }
  add("beta multiplicative", mult, false);
  add("beta^-1 = beta S", diff(dual_product(cf, beta, beta * F(s)), cf.eps_row()), false);
  Functional b4 = dual_product(cf, dual_product(cf, beta, beta), dual_product(cf, beta, beta));
  add("beta^4 = alpha", diff(b4, F(nk.alpha)), false);
  LinOp bl = conv_left(cf, beta), br = conv_right(cf, convolution_inverse(cf, beta));
  add("S+ = (beta * id)(id * beta^-1)", diff(bl * br, F(splus)), false);
  add("beta * id and id * beta^-1 commute", diff(bl * br, br * bl), false);
  add("beta * id self-adjoint", diff(F(g) * bl, bl.adjoint() * F(g)), false);
  add("id * beta^-1 self-adjoint", diff(F(g) * br, br.adjoint() * F(g)), false);

  LinOp sstar = antipode_adjoint(h);
  Functional ainv = nk.alpha * s;
  add("S* = gram adjoint of S", diff(sstar, gram_adjoint(s, g)), is_exact(sstar));
  add("S S* = id * alpha^-1", diff(s * sstar, conv_right(c, ainv)), is_exact(sstar));
  add("S* S = alpha * id", diff(sstar * s, conv_left(c, nk.alpha)), is_exact(sstar));
  add("(S*)* = S", diff(gram_adjoint(sstar, g), s), is_exact(sstar));

  LinOp u = unitary_antipode(h);
  Matrix uf = F(u), gf = F(g);
  add("U unitary", diff(gram_adjoint(uf, gf) * uf, Matrix::identity(n, Backend::FloatC)), false);
  add("U^2 = id", diff(uf * uf, Matrix::identity(n, Backend::FloatC)), false);
  double anti = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = uf * F(h.product(h.basis_vector(i), h.basis_vector(j)));
      Matrix r = fprod(uf.col(j), uf.col(i));
      anti = std::max(anti, diff(l, r));
    }
  add("U antimultiplicative", anti, false);
  add("U = polar factor of S", diff(uf, polar_right(F(s), gf).u), false);

  add("S^-1 = circ S circ", diff(inverse(s), m * s.conj() * m.conj()), h.backend() != Backend::FloatC);
  add("phi circ = conj phi", diff(phi * m, phi.conj()), h.backend() != Backend::FloatC);
  Matrix w(n, n, h.backend());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bb = 0; bb < n; ++bb) w(a, bb) = (phi * h.product(s.col(a), h.basis_vector(bb)))(0, 0);
  add("omega(x, y) = omega(y, S^2 x)", diff(w, (w * s * s).transpose()), h.backend() != Backend::FloatC);
  add("Gram form hermitian", diff(g, g.adjoint()), h.backend() != Backend::FloatC);
  return out;
}

// ---------------------------------------------------------------- involution conjugacy

ConjugacyResult conjugate_involutions(const Coalgebra& c0, const Matrix& g0, const ConjLinOp& diamond, bool diamond_compact) {
  Coalgebra c = c0.backend() == Backend::FloatC ? c0 : c0.to_backend(Backend::FloatC);
  Matrix g = F(g0), m = c.circ().m, d = F(diamond.m);
  ConjugacyResult out;
  out.diamond_compact = diamond_compact;
  out.q = d * m.conj();
  if (!is_self_adjoint(out.q, g)) throw std::domain_error("inconsistent involution pair");
  LinOp q2 = out.q * out.q;
  out.p = positive_root(q2, g, 4);
  LinOp pinv = inverse(out.p);
  auto add = [&](std::string name, double r) { out.checks.push_back(make_residual(std::move(name), r, false)); };
  LinOp p2 = out.p * out.p;
  add("P^4 = Q^2", rel_residual(p2 * p2, q2));
  add("P circ = circ P^-1", rel_residual(out.p * m, m * pinv.conj()));
  add("diamond P = P^-1 diamond", rel_residual(d * out.p.conj(), pinv * d));
  // P respects the diamond-stable sums of simple components
  auto comps = decompose_simple(c);
  std::vector<Matrix> bases;
  for (const auto& comp : comps) bases.push_back(F(comp.basis));
  std::vector<bool> used(comps.size(), false);
  double block = 0;
  for (std::size_t r = 0; r < comps.size(); ++r) {
    if (used[r]) continue;
    Matrix sum = bases[r];
    used[r] = true;
    Matrix img = d * bases[r].conj();
    for (std::size_t s2 = 0; s2 < comps.size(); ++s2) {
      if (used[s2]) continue;
      if (rank(bases[s2].hcat(img)) < bases[s2].cols() + img.cols()) {
        sum = sum.hcat(bases[s2]);
        used[s2] = true;
      }
    }
    Matrix pi = out.p * sum;
    Matrix sp = inverse(sum.adjoint() * sum) * sum.adjoint();
    block = std::max(block, rel_residual(sum * (sp * pi), pi));
  }
  add("P preserves diamond-stable blocks", block);
  if (diamond_compact) {
    add("diamond = P circ P^-1", rel_residual(out.p * m * pinv.conj(), d));
    add("P^2 = Q", rel_residual(p2, out.q));
  }
  return out;
}

ConjugacyResult conjugate_involutions(const HopfAlgebra& h, const ConjLinOp& diamond) {
  require_compact(h);
  HopfAlgebra hd = h.with_circ(diamond.m);
  bool compact = is_compact(hd).compact;
  return conjugate_involutions(h.coalgebra(), h.gram(), diamond, compact);
}

// ---------------------------------------------------------------- JSON

Json to_json(const HopfData& h) {
  Json j = to_json(h.coalgebra);
  Json mult = Json::array();
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = 0; b < h.dim(); ++b)
      for (const auto& t : h.mult[a][b]) mult.push_back(Json::array({a, b, t.k, to_json(t.c)}));
  j["mult"] = mult;
  Json unit = Json::array();
  for (std::size_t k = 0; k < h.dim(); ++k) unit.push_back(to_json(h.unit(k, 0)));
  j["unit"] = unit;
  j["antipode"] = to_json(h.antipode);
  return j;
}

HopfData hopf_from_json(const Json& j) {
  HopfData h;
  h.coalgebra = coalgebra_from_json(j);
  const std::size_t n = h.dim();
  const Backend b = h.coalgebra.backend;
  auto conv = [&](const Json& x) {
    Scalar s = scalar_from_json(x);
    return s.backend() == b ? s : s.to_backend(b);
  };
  h.mult.assign(n, std::vector<std::vector<MultTerm>>(n));
  for (const auto& t : j.at("mult")) {
    if (!t.is_array() || t.size() != 4) throw std::invalid_argument("mult entries are [i, j, k, scalar]");
    std::size_t a = t[0].get<std::size_t>(), bb = t[1].get<std::size_t>(), k = t[2].get<std::size_t>();
    if (a >= n || bb >= n || k >= n) throw std::invalid_argument("mult index out of range");
    h.mult[a][bb].push_back({k, conv(t[3])});
  }
  const Json& u = j.at("unit");
  if (u.size() != n) throw std::invalid_argument("unit has wrong length");
  h.unit = Matrix(n, 1, b);
  for (std::size_t k = 0; k < n; ++k) h.unit(k, 0) = conv(u[k]);
  h.antipode = matrix_from_json(j.at("antipode"), b);
  return h;
}

}  // namespace cqg
