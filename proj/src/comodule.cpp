#include "cqg/comodule.hpp"

#include <algorithm>

namespace cqg {

namespace {

double gap(const Matrix& a, const Matrix& b) {
  if (a.is_exact() && b.is_exact() && a.backend() == b.backend()) return a == b ? 0.0 : std::max(rel_residual(a, b), 1e-300);
  auto f = [](const Matrix& m) { return m.is_exact() ? m.to_backend(Backend::FloatC) : m; };
  return rel_residual(f(a), f(b));
}

bool ok(double r, Backend b) { return b == Backend::FloatC ? r <= tolerance().residual : r == 0; }

Comodule to_float(const Comodule& v) {
  if (v.backend() == Backend::FloatC) return v;
  Comodule out = v;
  for (auto& m : out.x) m = m.to_backend(Backend::FloatC);
  return out;
}

Matrix left_inv(const Matrix& b) { return inverse(b.adjoint() * b) * b.adjoint(); }

}  // namespace

Matrix Comodule::coeff(std::size_t i, std::size_t j) const {
  Matrix t(x.size(), 1, backend());
  for (std::size_t k = 0; k < x.size(); ++k) t(k, 0) = x[k](i, j);
  return t;
}

Comodule make_comodule(const Coalgebra& c, const std::vector<std::vector<Matrix>>& t, Side side) {
  Comodule v;
  v.m = t.size();
  v.side = side;
  if (v.m == 0) throw std::invalid_argument("empty comodule");
  const Backend b = t[0][0].backend();
  v.x.assign(c.dim(), Matrix(v.m, v.m, b));
  for (std::size_t i = 0; i < v.m; ++i) {
    if (t[i].size() != v.m) throw std::invalid_argument("coefficient matrix is not square");
    for (std::size_t j = 0; j < v.m; ++j) {
      if (t[i][j].rows() != c.dim()) throw std::invalid_argument("coefficient has wrong length");
      for (std::size_t k = 0; k < c.dim(); ++k) v.x[k](i, j) = t[i][j](k, 0);
    }
  }
  for (auto& r : check_comodule(c.backend() == b ? c : c.to_backend(b), v))
    if (!r.passed) throw AxiomError(std::move(r));
  return v;
}

Comodule trivial_comodule(const Coalgebra& c, const Matrix& grouplike) { return make_comodule(c, {{grouplike}}); }

Comodule comodule_from_grid(const Coalgebra& c, const CoefficientGrid& g) { return make_comodule(c, g); }

Comodule direct_sum(const Comodule& a, const Comodule& b) {
  if (a.side != b.side || a.x.size() != b.x.size()) throw std::invalid_argument("direct_sum of incompatible comodules");
  Comodule out;
  out.m = a.m + b.m;
  out.side = a.side;
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    Matrix z(out.m, out.m, a.backend());
    for (std::size_t i = 0; i < a.m; ++i)
      for (std::size_t j = 0; j < a.m; ++j) z(i, j) = a.x[k](i, j);
    for (std::size_t i = 0; i < b.m; ++i)
      for (std::size_t j = 0; j < b.m; ++j) z(a.m + i, a.m + j) = b.x[k](i, j).to_backend(a.backend());
    out.x.push_back(z);
  }
  return out;
}

std::vector<CheckResult> check_comodule(const Coalgebra& c, const Comodule& v) {
  const std::size_t n = c.dim();
  const Backend bk = v.backend();
  Coalgebra cc = c.backend() == bk ? c : c.to_backend(bk);
  CheckResult co{"comodule coassociativity", true, 0, ""}, cu{"comodule counit", true, 0, ""};
  if (v.x.size() != n) return {{co.name, false, 0, "coaction does not match the coalgebra dimension"}};
  Matrix eps = cc.eps_row();
  for (std::size_t i = 0; i < v.m; ++i)
    for (std::size_t j = 0; j < v.m; ++j) {
      std::string w = "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
      Matrix lhs = cc.delta_of(v.coeff(i, j));
      Matrix rhs(n, n, bk);
      for (std::size_t l = 0; l < v.m; ++l) {
        if (v.side == Side::Right) rhs += v.coeff(i, l) * v.coeff(l, j).transpose();
        else rhs += v.coeff(l, j) * v.coeff(i, l).transpose();
      }
      double g = gap(lhs, rhs);
      if (!ok(g, bk) && co.witness.empty()) co.witness = w;
      co.residual = std::max(co.residual, g);
      Matrix e = eps * v.coeff(i, j);
      Matrix expect(1, 1, bk);
      if (i == j) expect(0, 0) = Scalar::one(bk);
      g = gap(e, expect);
      if (!ok(g, bk) && cu.witness.empty()) cu.witness = w;
      cu.residual = std::max(cu.residual, g);
    }
  co.passed = co.witness.empty();
  cu.passed = cu.witness.empty();
  return {co, cu};
}

Comodule right_adjoint(const Comodule& v) {
  if (v.side != Side::Right) throw std::invalid_argument("right_adjoint needs a right comodule");
  Comodule out = v;
  out.side = Side::Left;
  for (auto& m : out.x) m = m.transpose();
  return out;
}

Comodule left_adjoint(const Comodule& v) {
  if (v.side != Side::Left) throw std::invalid_argument("left_adjoint needs a left comodule");
  Comodule out = v;
  out.side = Side::Right;
  for (auto& m : out.x) m = m.transpose();
  return out;
}

Comodule circ_dual(const Coalgebra& c, const Comodule& v) {
  if (!c.has_circ()) throw std::logic_error("circ_dual needs an involution");
  if (v.side != Side::Right) throw std::invalid_argument("circ_dual needs a right comodule");
  Matrix m = c.circ().m;
  if (m.backend() != v.backend()) m = m.to_backend(v.backend());
  // new t'_ab = (t_ba)°
  Comodule out = v;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Matrix y(v.m, v.m, v.backend());
    for (std::size_t p = 0; p < c.dim(); ++p)
      if (!m(k, p).is_zero()) y += m(k, p) * v.x[p].conj();
    out.x[k] = y.transpose();
  }
  return out;
}

Comodule antipode_dual(const HopfAlgebra& h, const Comodule& v) {
  if (v.side != Side::Right) throw std::invalid_argument("antipode_dual needs a right comodule");
  // new t'_ba = S(t_ab)
  Comodule out = twist(v, h.antipode());
  for (auto& m : out.x) m = m.transpose();
  return out;
}

Comodule twist(const Comodule& v, const LinOp& l0) {
  LinOp l = l0.backend() == v.backend() ? l0 : l0.to_backend(v.backend());
  Comodule out = v;
  for (std::size_t k = 0; k < v.x.size(); ++k) {
    Matrix y(v.m, v.m, v.backend());
    for (std::size_t p = 0; p < v.x.size(); ++p)
      if (!l(k, p).is_zero()) y += l(k, p) * v.x[p];
    out.x[k] = y;
  }
  return out;
}

Matrix coefficient_space(const Comodule& v) {
  Matrix all(v.x.size(), v.m * v.m, v.backend());
  for (std::size_t i = 0; i < v.m; ++i)
    for (std::size_t j = 0; j < v.m; ++j) all.set_col(i * v.m + j, v.coeff(i, j));
  return column_basis(all);
}

bool is_irreducible(const Comodule& v) { return coefficient_space(v).cols() == v.m * v.m; }

bool is_subcomodule(const Comodule& v, const Matrix& w) {
  Matrix wb = column_basis(w.backend() == v.backend() ? w : w.to_backend(v.backend()));
  for (const auto& x : v.x)
    if (rank(wb.hcat(x * wb)) > wb.cols()) return false;
  return true;
}

bool is_morphism(const Comodule& v, const Comodule& w, const LinOp& f) {
  for (std::size_t k = 0; k < v.x.size(); ++k)
    if (!ok(gap(f * v.x[k], w.x[k] * f), f.backend())) return false;
  return true;
}

UnitaryVerdict check_unitary(const Coalgebra& c, const Comodule& v0, const Matrix& b0) {
  if (!c.has_circ()) throw std::logic_error("check_unitary needs an involution");
  UnitaryVerdict out;
  const Backend bk = (v0.backend() == b0.backend()) ? b0.backend() : Backend::FloatC;
  Comodule v = bk == v0.backend() ? v0 : to_float(v0);
  Matrix b = bk == b0.backend() ? b0 : b0.to_backend(bk);
  Matrix m = c.circ().m.backend() == bk ? c.circ().m : c.circ().m.to_backend(bk);
  if (b.is_zero()) {
    out.unitary = out.degenerate = true;
    return out;
  }
  // per coalgebra coordinate k: (B X_k)(b, a) against (Y_k^T B)(b, a), Y_k the coordinates of t°
  std::vector<Matrix> lhs, rhs;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Matrix y(v.m, v.m, bk);
    for (std::size_t p = 0; p < c.dim(); ++p)
      if (!m(k, p).is_zero()) y += m(k, p) * v.x[p].conj();
    lhs.push_back(b * v.x[k]);
    rhs.push_back(y.transpose() * b);
  }
  for (std::size_t a = 0; a < v.m; ++a)
    for (std::size_t bb = 0; bb < v.m; ++bb) {
      Matrix l(c.dim(), 1, bk), r(c.dim(), 1, bk);
      for (std::size_t k = 0; k < c.dim(); ++k) {
        l(k, 0) = lhs[k](bb, a);
        r(k, 0) = rhs[k](bb, a);
      }
      double g = gap(l, r);
      if (!ok(g, bk) && out.witness.empty()) out.witness = "(e" + std::to_string(a + 1) + ", e" + std::to_string(bb + 1) + ")";
      out.residual = std::max(out.residual, g);
    }
  out.unitary = out.witness.empty();
  return out;
}

Matrix unitarize(const Coalgebra& c, const Comodule& v0, const std::vector<CoefficientGrid>& grids) {
  std::vector<Matrix> cols;
  for (const auto& g : grids)
    for (const auto& row : g)
      for (const auto& t : row) cols.push_back(t);
  if (cols.empty()) throw std::invalid_argument("unitarize needs at least one grid");
  Backend bk = cols.front().backend();
  bool mixed = bk != v0.backend() || std::any_of(cols.begin(), cols.end(), [&](const Matrix& t) { return t.backend() != bk; });
  if (mixed) bk = Backend::FloatC;
  Matrix tc(c.dim(), cols.size(), bk);
  for (std::size_t q = 0; q < cols.size(); ++q) tc.set_col(q, cols[q].backend() == bk ? cols[q] : cols[q].to_backend(bk));
  Comodule v = bk == v0.backend() ? v0 : to_float(v0);
  Matrix coords = left_inv(tc);
  // the grids are orthonormal for <x, y> = y^H Gc x
  Matrix gc = coords.adjoint() * coords;
  Matrix b(v.m, v.m, bk);
  for (std::size_t a = 0; a < v.m; ++a)
    for (std::size_t bb = 0; bb < v.m; ++bb)
      for (std::size_t i = 0; i < v.m; ++i) {
        Matrix ta = v.coeff(i, a), tb = v.coeff(i, bb);
        if (!ok(gap(tc * (coords * ta), ta), bk)) throw std::domain_error("comodule coefficients outside the given components");
        b(bb, a) += (tb.adjoint() * gc * ta)(0, 0);
      }
  b = (Scalar::one(bk) / Scalar::from_int(static_cast<long>(v.m), bk)) * b;
  auto spec = hermitian_spectrum(b);
  if (spec.values.front() <= tolerance().eq || !check_unitary(c, v, b).unitary)
    throw std::domain_error("comodule not completely reducible at tolerance");
  return b;
}

Matrix unitarize(const Coalgebra& c, const Comodule& v) {
  std::vector<CoefficientGrid> grids;
  for (const auto& comp : decompose_simple(c)) grids.push_back(structure_basis(c, comp));
  return unitarize(c, v, grids);
}

LinOp positive_comodule_iso(const HopfAlgebra& h, const Comodule& v, const Matrix& b, const Matrix& gm) {
  const Coalgebra& c = h.coalgebra();
  Comodule vs = antipode_dual(h, v);
  if (!check_unitary(c, v, b).unitary || !check_unitary(c, vs, gm).unitary) throw std::domain_error("forms not unitary");
  Matrix bb = b, gg = gm;
  if (bb.backend() != gg.backend()) {
    bb = bb.to_backend(Backend::FloatC);
    gg = gg.to_backend(Backend::FloatC);
  }
  LinOp phi = gg.transpose() * bb;
  const LinOp& s = h.antipode();
  Comodule vf = phi.backend() == v.backend() ? v : to_float(v);
  if (!is_morphism(vf, twist(vf, s * s), phi)) throw std::domain_error("internal consistency: not a comodule morphism");
  auto spec = hermitian_spectrum(bb * phi);
  if (!is_self_adjoint(phi, bb) || spec.values.front() <= tolerance().eq)
    throw std::domain_error("internal consistency: isomorphism not positive");
  return phi;
}

Json to_json(const Comodule& v) {
  Json triples = Json::array();
  for (std::size_t k = 0; k < v.x.size(); ++k)
    for (std::size_t i = 0; i < v.m; ++i)
      for (std::size_t j = 0; j < v.m; ++j)
        if (!v.x[k](i, j).is_zero()) triples.push_back(Json::array({i, k, j, to_json(v.x[k](i, j))}));
  return Json{{"dim", v.m}, {"coaction", triples}, {"side", v.side == Side::Right ? "right" : "left"}};
}

Comodule comodule_from_json(const Json& j, std::size_t n, Backend b) {
  Comodule v;
  v.m = j.at("dim").get<std::size_t>();
  std::string side = j.value("side", "right");
  if (side != "right" && side != "left") throw std::invalid_argument("side must be right or left");
  v.side = side == "right" ? Side::Right : Side::Left;
  v.x.assign(n, Matrix(v.m, v.m, b));
  for (const auto& t : j.at("coaction")) {
    if (!t.is_array() || t.size() != 4) throw std::invalid_argument("coaction entries are [i, k, j, scalar]");
    std::size_t i = t[0].get<std::size_t>(), k = t[1].get<std::size_t>(), jj = t[2].get<std::size_t>();
    if (i >= v.m || jj >= v.m || k >= n) throw std::invalid_argument("coaction index out of range");
    Scalar s = scalar_from_json(t[3]);
    v.x[k](i, jj) = s.backend() == b ? s : s.to_backend(b);
  }
  return v;
}

}  // namespace cqg
