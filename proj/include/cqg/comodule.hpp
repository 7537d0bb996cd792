#pragma once

// Finite-dimensional comodules by coefficient matrices, their duals, and
// invariant inner products.

#include "cqg/hopf.hpp"

namespace cqg {

enum class Side { Right, Left };

/// Coefficients t_ij = sum_k x[k](i, j) e_k.
/// Right: chi(e_j) = sum_i e_i (x) t_ij. Left: chi(e_j) = sum_i t_ij (x) e_i.
struct Comodule {
  std::size_t m = 0;
  std::vector<Matrix> x;  // one m x m matrix per coalgebra basis element
  Side side = Side::Right;

  Backend backend() const { return x.front().backend(); }
  /// t_ij as a coalgebra vector.
  Matrix coeff(std::size_t i, std::size_t j) const;
};

Comodule make_comodule(const Coalgebra& c, const std::vector<std::vector<Matrix>>& t, Side side = Side::Right);
Comodule trivial_comodule(const Coalgebra& c, const Matrix& grouplike);
/// The comodule whose coefficients are a structure grid.
Comodule comodule_from_grid(const Coalgebra& c, const CoefficientGrid& g);
Comodule direct_sum(const Comodule& a, const Comodule& b);

/// Coassociativity and counit for the comodule's side.
std::vector<CheckResult> check_comodule(const Coalgebra& c, const Comodule& v);

/// Right comodule -> left comodule on V*: sum f_{-1} f_0(v) = sum f(v_0) v_1.
Comodule right_adjoint(const Comodule& v);
/// Left comodule -> right comodule on W*, the inverse construction.
Comodule left_adjoint(const Comodule& v);
/// Conjugate dual with coefficients t_ij°.
Comodule circ_dual(const Coalgebra& c, const Comodule& v);
/// V* with sum f_0(v) f_1 = sum f(v_0) S(v_1).
Comodule antipode_dual(const HopfAlgebra& h, const Comodule& v);
/// Same space, coaction (id (x) L) chi for a linear map L of the coalgebra.
Comodule twist(const Comodule& v, const LinOp& l);

/// Basis (columns) of the span of the coefficients.
Matrix coefficient_space(const Comodule& v);
bool is_irreducible(const Comodule& v);
/// chi(W) inside W (x) C for W spanned by the columns of w.
bool is_subcomodule(const Comodule& v, const Matrix& w);
/// A linear f: V -> W with (f (x) id) chi_V = chi_W f.
bool is_morphism(const Comodule& v, const Comodule& w, const LinOp& f);

struct UnitaryVerdict {
  bool unitary = false;
  bool degenerate = false;  // B = 0
  double residual = 0;
  std::string witness;      // "(e_a, e_b)"
};

/// Checks sum beta(u_0, v) u_1 = sum beta(u, v_0) v_1° with beta(u, v) = v^H B u.
UnitaryVerdict check_unitary(const Coalgebra& c, const Comodule& v, const Matrix& b);

/// Inner product making v unitary, pulled back from the inner product on C in
/// which the given structure grids are orthonormal.
Matrix unitarize(const Coalgebra& c, const Comodule& v, const std::vector<CoefficientGrid>& grids);
/// Same, with grids from decompose_simple and structure_basis.
Matrix unitarize(const Coalgebra& c, const Comodule& v);

/// Positive isomorphism (V, chi) -> (V, (id (x) S^2) chi) built from unitary
/// products b on V and gm on the antipode dual.
LinOp positive_comodule_iso(const HopfAlgebra& h, const Comodule& v, const Matrix& b, const Matrix& gm);

Json to_json(const Comodule& v);
Comodule comodule_from_json(const Json& j, std::size_t coalgebra_dim, Backend b);

}  // namespace cqg
