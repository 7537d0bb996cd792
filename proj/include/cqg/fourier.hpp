#pragma once

// Fourier forms and Fourier products on a coalgebra, and the passage between them.

#include <map>

#include "cqg/hopf.hpp"

namespace cqg {

/// omega(e_a, e_b) = w(a, b); bilinear, no conjugation.
struct FourierForm {
  Matrix w;
};

/// e_i * e_j = sum_k p[k](i, j) e_k
struct FourierProduct {
  std::vector<Matrix> p;

  std::size_t dim() const { return p.size(); }
  Matrix apply(const Matrix& x, const Matrix& y) const;
};

/// sum omega(c, d_1) d_2 = sum c_1 omega(c_2, d) on basis pairs.
CheckResult check_form(const Coalgebra& c, const FourierForm& f);
/// Delta(c * d) = sum (c * d_1) (x) d_2 = sum c_1 (x) (c_2 * d) on basis pairs.
CheckResult check_product(const Coalgebra& c, const FourierProduct& p);

/// c * d = sum omega(c, d_1) d_2. Throws AxiomError on an unbalanced form.
FourierProduct form_to_product(const Coalgebra& c, const FourierForm& f);
/// omega(c, d) = eps(c * d). Throws AxiomError on an invalid product.
FourierForm product_to_form(const Coalgebra& c, const FourierProduct& p);

/// Basis of the space of Fourier forms (nullspace of the balance equations).
std::vector<FourierForm> fourier_form_basis(const Coalgebra& c);

/// omega_phi(x, y) = phi(S(x) y) for the normal integral of h.
FourierForm integral_form(const HopfAlgebra& h);

/// The neutral element s of the product restricted to a simple component:
/// omega(c, s) = eps(c) = omega(s, c) for c in the component. Throws
/// "degenerate restriction" when omega is degenerate there.
Matrix neutral_element(const Coalgebra& c, const SimpleComponent& comp, const FourierForm& f);

struct FourierFlags {
  bool positive = false;
  bool positive_definite = false;
  bool hermitian = false;
  bool symmetric = false;
  bool normal = false;
  std::map<std::string, std::string> witness;  // flag name -> violating basis element(s)
};

/// <c, d> = omega(d°, c); matrix K = M^T W with <x, y> = y^H K x.
Matrix sesquilinear_matrix(const Coalgebra& c, const FourierForm& f);
FourierFlags classify(const Coalgebra& c, const FourierForm& f);

Json to_json(const FourierForm& f);
Json to_json(const FourierProduct& p);

}  // namespace cqg
