#include "cqg/coalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace cqg {

AxiomError::AxiomError(CheckResult r)
    : std::runtime_error("axiom failed: " + r.name + (r.witness.empty() ? "" : " at " + r.witness)), result_(std::move(r)) {}

namespace {

using Key = std::vector<std::size_t>;

// Sparse tensor with exact or tolerant comparison.
class Tensor {
 public:
  explicit Tensor(Backend b) : b_(b) {}
  void add(Key k, const Scalar& c) {
    auto it = m_.find(k);
    if (it == m_.end()) m_.emplace(std::move(k), c);
    else it->second += c;
  }
  // max |this - o| and the worst key
  std::pair<double, Key> diff(const Tensor& o) const {
    std::map<Key, Scalar> d = m_;
    for (const auto& [k, v] : o.m_) {
      auto it = d.find(k);
      if (it == d.end()) d.emplace(k, -v);
      else it->second -= v;
    }
    double worst = 0;
    Key wk;
    for (const auto& [k, v] : d) {
      if (v.is_exact() && v.is_zero()) continue;
      double a = v.abs();
      if (v.is_exact() && a == 0) a = 1e-300;  // nonzero but tiny
      if (a > worst) {
        worst = a;
        wk = k;
      }
    }
    return {worst, wk};
  }

 private:
  Backend b_;
  std::map<Key, Scalar> m_;
};

bool ok(double residual, Backend b) { return b != Backend::FloatC ? residual == 0 : residual <= tolerance().residual; }

CheckResult result(std::string name, double residual, Backend b, std::string witness) {
  CheckResult r{std::move(name), ok(residual, b), residual, ""};
  if (!r.passed) r.witness = std::move(witness);
  return r;
}

}  // namespace

CheckResult check_shape(const CoalgebraData& d) {
  const std::size_t n = d.dim();
  auto fail = [](std::string w) { return CheckResult{"shape", false, 0, std::move(w)}; };
  if (n == 0) return fail("empty basis");
  if (d.delta.size() != n) return fail("delta has " + std::to_string(d.delta.size()) + " entries, expected " + std::to_string(n));
  if (d.eps.size() != n) return fail("eps has wrong length");
  for (std::size_t k = 0; k < n; ++k) {
    if (d.eps[k].backend() != d.backend) return fail("eps backend");
    for (const auto& t : d.delta[k]) {
      if (t.i >= n || t.j >= n) return fail("delta index out of range at " + d.basis[k]);
      if (t.c.backend() != d.backend) return fail("delta backend at " + d.basis[k]);
    }
  }
  if (d.circ && (d.circ->rows() != n || d.circ->cols() != n || d.circ->backend() != d.backend)) return fail("circ shape");
  return {"shape", true, 0, ""};
}

CheckResult check_coassociative(const CoalgebraData& d) {
  double worst = 0;
  std::string wit;
  for (std::size_t k = 0; k < d.dim(); ++k) {
    Tensor left(d.backend), right(d.backend);
    for (const auto& t : d.delta[k]) {
      for (const auto& u : d.delta[t.i]) left.add({u.i, u.j, t.j}, t.c * u.c);
      for (const auto& u : d.delta[t.j]) right.add({t.i, u.i, u.j}, t.c * u.c);
    }
    auto [r, key] = left.diff(right);
    if (!ok(r, d.backend) && wit.empty()) wit = d.basis[k];
    worst = std::max(worst, r);
  }
  return result("coassociativity", worst, d.backend, wit);
}

CheckResult check_counit(const CoalgebraData& d) {
  double worst = 0;
  std::string wit;
  for (std::size_t k = 0; k < d.dim(); ++k) {
    Tensor l(d.backend), r(d.backend), id(d.backend);
    id.add({k}, Scalar::one(d.backend));
    for (const auto& t : d.delta[k]) {
      l.add({t.j}, d.eps[t.i] * t.c);
      r.add({t.i}, t.c * d.eps[t.j]);
    }
    double x = std::max(l.diff(id).first, r.diff(id).first);
    if (!ok(x, d.backend) && wit.empty()) wit = d.basis[k];
    worst = std::max(worst, x);
  }
  return result("counit", worst, d.backend, wit);
}

CheckResult check_circ_involutive(const CoalgebraData& d) {
  if (!d.circ) return {"circ involutive", true, 0, ""};
  const Matrix& m = *d.circ;
  Matrix sq = m * m.conj();
  Matrix id = Matrix::identity(d.dim(), d.backend);
  double worst = 0;
  std::string wit;
  for (std::size_t j = 0; j < d.dim(); ++j) {
    double r = rel_residual(sq.col(j), id.col(j));
    if (!ok(r, d.backend) && wit.empty()) wit = d.basis[j];
    worst = std::max(worst, r);
  }
  return result("circ involutive", worst, d.backend, wit);
}

CheckResult check_circ_anticomultiplicative(const CoalgebraData& d) {
  if (!d.circ) return {"circ anticomultiplicative", true, 0, ""};
  const Matrix& m = *d.circ;
  double worst = 0;
  std::string wit;
  for (std::size_t k = 0; k < d.dim(); ++k) {
    Tensor lhs(d.backend), rhs(d.backend);
    // Delta(e_k°) = sum_l M_lk Delta(e_l)
    for (std::size_t l = 0; l < d.dim(); ++l) {
      if (m(l, k).is_zero()) continue;
      for (const auto& t : d.delta[l]) lhs.add({t.i, t.j}, m(l, k) * t.c);
    }
    // sum conj(c) (e_j)° (x) (e_i)°
    for (const auto& t : d.delta[k]) {
      Scalar cc = t.c.conj();
      for (std::size_t a = 0; a < d.dim(); ++a) {
        if (m(a, t.j).is_zero()) continue;
        for (std::size_t b = 0; b < d.dim(); ++b) {
          if (m(b, t.i).is_zero()) continue;
          rhs.add({a, b}, cc * m(a, t.j) * m(b, t.i));
        }
      }
    }
    double r = lhs.diff(rhs).first;
    if (!ok(r, d.backend) && wit.empty()) wit = d.basis[k];
    worst = std::max(worst, r);
  }
  return result("circ anticomultiplicative", worst, d.backend, wit);
}

CheckResult check_circ_counit(const CoalgebraData& d) {
  if (!d.circ) return {"circ counit", true, 0, ""};
  const Matrix& m = *d.circ;
  double worst = 0;
  std::string wit;
  for (std::size_t k = 0; k < d.dim(); ++k) {
    Scalar s = Scalar::zero(d.backend);
    for (std::size_t l = 0; l < d.dim(); ++l) s += m(l, k) * d.eps[l];
    Scalar diff = s - d.eps[k].conj();
    double r = diff.is_exact() ? (diff.is_zero() ? 0.0 : std::max(diff.abs(), 1e-300)) : diff.abs();
    if (!ok(r, d.backend) && wit.empty()) wit = d.basis[k];
    worst = std::max(worst, r);
  }
  return result("circ counit", worst, d.backend, wit);
}

std::vector<CheckResult> check_coalgebra(const CoalgebraData& d) {
  std::vector<CheckResult> out{check_shape(d)};
  if (!out.back().passed) return out;
  out.push_back(check_coassociative(d));
  out.push_back(check_counit(d));
  if (d.circ) {
    out.push_back(check_circ_involutive(d));
    out.push_back(check_circ_anticomultiplicative(d));
    out.push_back(check_circ_counit(d));
  }
  return out;
}

// ---------------------------------------------------------------- Coalgebra

Coalgebra::Coalgebra(CoalgebraData d) : d_(std::move(d)) {
  for (auto& r : check_coalgebra(d_))
    if (!r.passed) throw AxiomError(std::move(r));
}

ConjLinOp Coalgebra::circ() const {
  if (!d_.circ) throw std::logic_error("coalgebra has no involution");
  return {*d_.circ};
}

Matrix Coalgebra::delta_of(const Matrix& x) const {
  Matrix out(dim(), dim(), backend());
  for (std::size_t k = 0; k < dim(); ++k) {
    if (x(k, 0).is_zero()) continue;
    for (const auto& t : d_.delta[k]) out(t.i, t.j) += x(k, 0) * t.c;
  }
  return out;
}

Matrix Coalgebra::eps_row() const {
  Matrix e(1, dim(), backend());
  for (std::size_t k = 0; k < dim(); ++k) e(0, k) = d_.eps[k];
  return e;
}

namespace {
// Left inverse (B^H B)^{-1} B^H of a full-column-rank B.
Matrix left_inverse(const Matrix& b) { return inverse(b.adjoint() * b) * b.adjoint(); }
}  // namespace

bool Coalgebra::is_subcoalgebra(const Matrix& b) const {
  if (b.cols() == 0) return true;
  Matrix bp = left_inverse(b);
  for (std::size_t a = 0; a < b.cols(); ++a) {
    Matrix x = delta_of(b.col(a));
    Matrix proj = b * (bp * x * bp.transpose()) * b.transpose();
    if (!approx_equal(proj, x)) return false;
  }
  return true;
}

Coalgebra Coalgebra::to_backend(Backend b) const {
  CoalgebraData d = d_;
  d.backend = b;
  for (auto& row : d.delta)
    for (auto& t : row) t.c = t.c.to_backend(b);
  for (auto& e : d.eps) e = e.to_backend(b);
  if (d.circ) d.circ = d.circ->to_backend(b);
  return Coalgebra(std::move(d));
}

Coalgebra matrix_coalgebra(std::size_t n, Backend b) {
  if (n == 0) throw std::invalid_argument("matrix_coalgebra: n must be positive");
  CoalgebraData d;
  d.backend = b;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  d.basis.resize(n * n);
  d.delta.resize(n * n);
  d.eps.assign(n * n, Scalar::zero(b));
  Matrix circ(n * n, n * n, b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = idx(i, j);
      d.basis[k] = "t" + std::to_string(i + 1) + std::to_string(j + 1);
      for (std::size_t l = 0; l < n; ++l) d.delta[k].push_back({idx(i, l), idx(l, j), Scalar::one(b)});
      if (i == j) d.eps[k] = Scalar::one(b);
      circ(idx(j, i), k) = Scalar::one(b);
    }
  }
  d.circ = circ;
  return Coalgebra(std::move(d));
}

Matrix dual_product(const Coalgebra& c, const Matrix& f, const Matrix& g) {
  Matrix out(1, c.dim(), c.backend());
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Scalar s = Scalar::zero(c.backend());
    for (const auto& t : c.delta(k)) {
      if (f(0, t.i).is_zero() || g(0, t.j).is_zero()) continue;
      s += t.c * f(0, t.i) * g(0, t.j);
    }
    out(0, k) = s;
  }
  return out;
}

// ---------------------------------------------------------------- decomposition

namespace {

struct NotCosemisimple {};
struct NeedFloat {};

std::vector<SimpleComponent> decompose_in(const Coalgebra& c, unsigned seed) {
  const std::size_t n = c.dim();
  const Backend b = c.backend();
  // prod[i][j] = e^i e^j
  std::vector<std::vector<Matrix>> prod(n, std::vector<Matrix>(n, Matrix(1, n, b)));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta(k)) prod[t.i][t.j](0, k) += t.c;

  // semisimplicity of the dual algebra via the trace form
  Matrix trace_form(n, n, b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bb = 0; bb < n; ++bb) {
      Scalar s = Scalar::zero(b);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (prod[a][j](0, k).is_zero() || prod[bb][k](0, j).is_zero()) continue;
          s += prod[a][j](0, k) * prod[bb][k](0, j);
        }
      trace_form(a, bb) = s;
    }
  if (rank(trace_form) < n) throw NotCosemisimple{};

  // center
  Matrix comm(n * n, n, b);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) comm(j * n + l, k) = prod[k][j](0, l) - prod[j][k](0, l);
  Matrix z = nullspace(comm);
  const std::size_t m = z.cols();

  auto mult = [&](const Matrix& f, const Matrix& g) { return dual_product(c, f, g); };

  for (unsigned attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::uniform_int_distribution<int> dist(-1000, 1000);
    Matrix w(m, 1, b);
    for (std::size_t a = 0; a < m; ++a) w(a, 0) = Scalar::from_int(dist(rng), b);
    Matrix r = (z * w).transpose();
    Matrix op(m, m, b);
    for (std::size_t a = 0; a < m; ++a) {
      Matrix rz = mult(r, z.col(a).transpose());
      auto x = solve(z, rz.transpose());
      if (!x) throw NotCosemisimple{};
      op.set_col(a, *x);
    }
    std::vector<Eigenspace> split;
    try {
      split = eigensplit(op);
    } catch (const std::domain_error&) {
      throw NotCosemisimple{};
    }
    if (b != Backend::FloatC && !split.empty() && !split[0].value.is_exact()) throw NeedFloat{};
    if (std::any_of(split.begin(), split.end(), [](const Eigenspace& e) { return e.basis.cols() != 1; })) continue;

    std::vector<SimpleComponent> comps;
    std::size_t total = 0;
    for (const auto& es : split) {
      Matrix u = (z * es.basis).transpose();
      Matrix u2 = mult(u, u);
      std::size_t p = 0;
      double best = -1;
      for (std::size_t k = 0; k < n; ++k)
        if (u(0, k).abs() > best) best = u(0, k).abs(), p = k;
      Scalar cc = u2(0, p) / u(0, p);
      if (!approx_equal(u2, cc * u) || cc.is_zero()) throw NotCosemisimple{};
      Matrix e = (Scalar::one(b) / cc) * u;
      Matrix proj(n, n, b);
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& t : c.delta(k))
          if (!e(0, t.j).is_zero()) proj(t.i, k) += t.c * e(0, t.j);
      Matrix basis = column_basis(proj);
      std::size_t d = basis.cols();
      std::size_t root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d))));
      if (d == 0 || root * root != d || !c.is_subcoalgebra(basis)) throw NotCosemisimple{};
      total += d;
      comps.push_back({0, root, basis, e});
    }
    if (total != n) throw NotCosemisimple{};
    auto support = [](const Matrix& bm) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < bm.rows(); ++i)
        for (std::size_t j = 0; j < bm.cols(); ++j)
          if (!bm(i, j).is_zero()) {
            s.push_back(i);
            break;
          }
      return s;
    };
    std::stable_sort(comps.begin(), comps.end(), [&](const SimpleComponent& x, const SimpleComponent& y) {
      if (x.basis.cols() != y.basis.cols()) return x.basis.cols() < y.basis.cols();
      return support(x.basis) < support(y.basis);
    });
    for (std::size_t i = 0; i < comps.size(); ++i) comps[i].index = i;
    return comps;
  }
  throw NotCosemisimple{};
}

}  // namespace

std::vector<SimpleComponent> decompose_simple(const Coalgebra& c, unsigned seed) {
  try {
    try {
      return decompose_in(c, seed);
    } catch (const NeedFloat&) {
      return decompose_in(c.to_backend(Backend::FloatC), seed);
    }
  } catch (const NotCosemisimple&) {
    throw std::domain_error("not cosemisimple at tolerance");
  }
}

// ---------------------------------------------------------------- structure basis

namespace {

// Restriction of the coalgebra to the span of b, in the coordinates of b.
struct Restricted {
  std::size_t d;
  std::vector<std::vector<Matrix>> prod;  // prod[p][q] = f^p f^q as 1 x d rows
  Matrix eps;                              // 1 x d
  Matrix circ;                             // d x d, conjugate-linear
};

Restricted restrict_to(const Coalgebra& c, const Matrix& b) {
  const Backend bk = b.backend();
  const std::size_t d = b.cols();
  Matrix bp = left_inverse(b);
  Restricted r{d, std::vector<std::vector<Matrix>>(d, std::vector<Matrix>(d, Matrix(1, d, bk))), c.eps_row() * b,
               bp * c.circ().m * b.conj()};
  for (std::size_t a = 0; a < d; ++a) {
    Matrix y = bp * c.delta_of(b.col(a)) * bp.transpose();
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) r.prod[p][q](0, a) = y(p, q);
  }
  return r;
}

Matrix rmul(const Restricted& r, const Matrix& f, const Matrix& g) {
  Matrix out(1, r.d, f.backend());
  for (std::size_t p = 0; p < r.d; ++p) {
    if (f(0, p).is_zero()) continue;
    for (std::size_t q = 0; q < r.d; ++q) {
      if (g(0, q).is_zero()) continue;
      out += (f(0, p) * g(0, q)) * r.prod[p][q];
    }
  }
  return out;
}

// f*(c) = conj f(c°)
Matrix rstar(const Restricted& r, const Matrix& f) { return (f * r.circ).conj(); }

}  // namespace

CoefficientGrid structure_basis(const Coalgebra& c, const SimpleComponent& comp, unsigned seed) {
  if (!c.has_circ()) throw std::logic_error("structure_basis needs an involution");
  const std::size_t m = comp.n;
  if (m == 1 && comp.basis.backend() == c.backend()) {
    Matrix t = comp.basis.col(0);
    Scalar e = (c.eps_row() * t)(0, 0);
    t = (Scalar::one(c.backend()) / e) * t;
    CoefficientGrid g{{t}};
    if (check_grid(c, g).passed) return g;
  }
  Coalgebra cf = c.backend() == Backend::FloatC ? c : c.to_backend(Backend::FloatC);
  Matrix b = comp.basis.to_backend(Backend::FloatC);
  Restricted r = restrict_to(cf, b);
  const std::size_t d = r.d;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  auto random_row = [&] {
    Matrix x(1, d, Backend::FloatC);
    for (std::size_t p = 0; p < d; ++p) x(0, p) = Scalar::floatc(nd(rng), nd(rng));
    return x;
  };
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix x = random_row();
    Matrix h = x + rstar(r, x);
    Matrix lh(d, d, Backend::FloatC);
    for (std::size_t q = 0; q < d; ++q) {
      Matrix eq(1, d, Backend::FloatC);
      eq(0, q) = Scalar::floatc(1);
      lh.set_col(q, rmul(r, h, eq).transpose());
    }
    std::vector<Eigenspace> split;
    try {
      split = eigensplit(lh);
    } catch (const std::domain_error&) {
      continue;
    }
    if (split.size() != m ||
        std::any_of(split.begin(), split.end(), [m](const Eigenspace& e) { return e.basis.cols() != m; }))
      continue;
    std::vector<Matrix> proj;
    for (std::size_t i = 0; i < m; ++i) {
      Matrix p = r.eps;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        Matrix f = (Scalar::one(Backend::FloatC) / (split[i].value - split[j].value)) * (h - split[j].value * r.eps);
        p = rmul(r, p, f);
      }
      proj.push_back(p);
    }
    Matrix y = random_row();
    std::vector<Matrix> e1{proj[0]};
    bool good = true;
    std::size_t piv = 0;
    double best = -1;
    for (std::size_t p = 0; p < d; ++p)
      if (proj[0](0, p).abs() > best) best = proj[0](0, p).abs(), piv = p;
    for (std::size_t j = 1; j < m && good; ++j) {
      Matrix w = rmul(r, rmul(r, proj[0], y), proj[j]);
      Matrix ww = rmul(r, w, rstar(r, w));
      FloatC cc = (ww(0, piv) / proj[0](0, piv)).as_float();
      if (cc.real() <= 1e-8 || std::abs(cc.imag()) > 1e-6 * cc.real()) good = false;
      e1.push_back(Scalar::floatc(1 / std::sqrt(cc.real())) * w);
    }
    if (!good) continue;
    Matrix emat(m * m, d, Backend::FloatC);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Matrix eij = rmul(r, rstar(r, e1[i]), e1[j]);
        for (std::size_t p = 0; p < d; ++p) emat(i * m + j, p) = eij(0, p);
      }
    Matrix tm;
    try {
      tm = inverse(emat);
    } catch (const std::domain_error&) {
      continue;
    }
    CoefficientGrid grid(m, std::vector<Matrix>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) grid[i][j] = b * tm.col(i * m + j);
    if (check_grid(cf, grid).passed) return grid;
  }
  throw std::domain_error("no structure basis: component is not compact at tolerance");
}

CoefficientGrid standard_grid(std::size_t n, Backend b) {
  CoefficientGrid g(n, std::vector<Matrix>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g[i][j] = Matrix(n * n, 1, b);
      g[i][j](i * n + j, 0) = Scalar::one(b);
    }
  return g;
}

CheckResult check_grid(const Coalgebra& c, const CoefficientGrid& grid) {
  const std::size_t m = grid.size();
  if (m == 0) return {"structure basis", false, 0, "empty grid"};
  const Backend b = grid[0][0].backend();
  Coalgebra cb = c.backend() == b ? c : c.to_backend(b);
  double worst = 0;
  std::string wit;
  auto note = [&](double r, std::size_t i, std::size_t j) {
    if (!ok(r, b) && wit.empty()) wit = "t" + std::to_string(i + 1) + std::to_string(j + 1);
    worst = std::max(worst, r);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix expect(c.dim(), c.dim(), b);
      for (std::size_t k = 0; k < m; ++k) expect += grid[i][k] * grid[k][j].transpose();
      note(rel_residual(cb.delta_of(grid[i][j]), expect), i, j);
      if (cb.has_circ()) note(rel_residual(cb.circ().apply(grid[i][j]), grid[j][i]), i, j);
    }
  return result("structure basis", worst, b, wit);
}

// ---------------------------------------------------------------- JSON

Json to_json(const CoalgebraData& d) {
  Json j;
  j["dim"] = d.dim();
  j["backend"] = d.backend == Backend::FloatC ? "float" : backend_name(d.backend);
  j["basis"] = d.basis;
  Json delta = Json::array();
  for (std::size_t k = 0; k < d.dim(); ++k)
    for (const auto& t : d.delta[k]) delta.push_back(Json::array({t.i, t.j, k, to_json(t.c)}));
  j["delta"] = delta;
  Json eps = Json::array();
  for (const auto& e : d.eps) eps.push_back(to_json(e));
  j["eps"] = eps;
  if (d.circ) j["circ"] = to_json(*d.circ);
  return j;
}

namespace {
Backend backend_from_name(const std::string& s) {
  if (s == "gaussq") return Backend::GaussQ;
  if (s == "float") return Backend::FloatC;
  if (s == "laurent") return Backend::Laurent;
  throw std::invalid_argument("unknown backend: " + s);
}
}  // namespace

CoalgebraData coalgebra_from_json(const Json& j) {
  CoalgebraData d;
  d.backend = backend_from_name(j.value("backend", std::string("gaussq")));
  const std::size_t n = j.at("dim").get<std::size_t>();
  if (j.contains("basis")) d.basis = j.at("basis").get<std::vector<std::string>>();
  else
    for (std::size_t k = 0; k < n; ++k) d.basis.push_back("e" + std::to_string(k));
  if (d.basis.size() != n) throw std::invalid_argument("basis length does not match dim");
  d.delta.resize(n);
  auto conv = [&](const Json& x) {
    Scalar s = scalar_from_json(x);
    return s.backend() == d.backend ? s : s.to_backend(d.backend);
  };
  for (const auto& t : j.at("delta")) {
    if (!t.is_array() || t.size() != 4) throw std::invalid_argument("delta entries are [i, j, k, scalar]");
    std::size_t k = t[2].get<std::size_t>();
    if (k >= n) throw std::invalid_argument("delta index out of range");
    d.delta[k].push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), conv(t[3])});
  }
  for (const auto& e : j.at("eps")) d.eps.push_back(conv(e));
  if (j.contains("circ") && !j.at("circ").is_null()) d.circ = matrix_from_json(j.at("circ"), d.backend);
  return d;
}

}  // namespace cqg
