#pragma once

// Finite-dimensional coalgebras by structure constants, optional
// conjugate-linear involution, and decomposition into simple subcoalgebras.

#include <optional>
#include <string>
#include <vector>

#include "cqg/linalg.hpp"

namespace cqg {

/// One term c * e_i (x) e_j of Delta(e_k).
struct DeltaTerm {
  std::size_t i, j;
  Scalar c;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  double residual = 0;
  std::string witness;  // empty when passed
};

/// Thrown when an axiom check fails during construction.
class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(CheckResult r);
  const CheckResult& result() const { return result_; }

 private:
  CheckResult result_;
};

/// Unvalidated coalgebra tensors, as read from a file or built in code.
struct CoalgebraData {
  Backend backend = Backend::GaussQ;
  std::vector<std::string> basis;
  std::vector<std::vector<DeltaTerm>> delta;  // delta[k] lists Delta(e_k)
  std::vector<Scalar> eps;
  std::optional<Matrix> circ;  // column j = (e_j)°, acting conjugate-linearly

  std::size_t dim() const { return basis.size(); }
};

// Individual checks on raw data.
CheckResult check_shape(const CoalgebraData& d);
CheckResult check_coassociative(const CoalgebraData& d);
CheckResult check_counit(const CoalgebraData& d);
CheckResult check_circ_involutive(const CoalgebraData& d);
CheckResult check_circ_anticomultiplicative(const CoalgebraData& d);
CheckResult check_circ_counit(const CoalgebraData& d);
/// All applicable checks, in order.
std::vector<CheckResult> check_coalgebra(const CoalgebraData& d);

/// Validated coalgebra. Construction throws AxiomError on the first failing check.
class Coalgebra {
 public:
  explicit Coalgebra(CoalgebraData d);

  const CoalgebraData& data() const { return d_; }
  std::size_t dim() const { return d_.dim(); }
  Backend backend() const { return d_.backend; }
  const std::string& name(std::size_t k) const { return d_.basis[k]; }
  const std::vector<DeltaTerm>& delta(std::size_t k) const { return d_.delta[k]; }
  const Scalar& eps(std::size_t k) const { return d_.eps[k]; }
  bool has_circ() const { return d_.circ.has_value(); }
  ConjLinOp circ() const;

  /// Delta(x) for a column vector x, as the matrix X with Delta x = sum X_ij e_i (x) e_j.
  Matrix delta_of(const Matrix& x) const;
  /// eps as a 1 x n row.
  Matrix eps_row() const;
  /// Delta(span of columns of b) inside span (x) span.
  bool is_subcoalgebra(const Matrix& b) const;

  Coalgebra to_backend(Backend b) const;

 private:
  CoalgebraData d_;
};

/// c(V) for dim V = n, basis t_ij at index (i-1)n + (j-1), t_ij° = t_ji.
Coalgebra matrix_coalgebra(std::size_t n, Backend b = Backend::GaussQ);

/// Element of the dual algebra as a row of values on the basis.
/// (f g)(c) = sum f(c_1) g(c_2).
Matrix dual_product(const Coalgebra& c, const Matrix& f, const Matrix& g);

struct SimpleComponent {
  std::size_t index = 0;
  std::size_t n = 0;         // the component is n x n matrix coefficients
  Matrix basis;              // columns span C_rho inside C
  Matrix central_idempotent; // e_rho in the dual algebra, 1 x dim
};

/// Splits a cosemisimple coalgebra into simple subcoalgebras. Falls back to the
/// float backend when the splitting field is not Q(i). Throws std::domain_error
/// "not cosemisimple at tolerance" otherwise.
std::vector<SimpleComponent> decompose_simple(const Coalgebra& c, unsigned seed = 1);

/// Matrix coefficients t_ij (grid[i][j] is a column vector in C) of a simple
/// component of a compact coalgebra with Delta t_ij = sum_k t_ik (x) t_kj and
/// t_ij° = t_ji. Requires the involution.
using CoefficientGrid = std::vector<std::vector<Matrix>>;
CoefficientGrid structure_basis(const Coalgebra& c, const SimpleComponent& comp, unsigned seed = 1);

/// The grid t_ij = e_{(i-1)n + (j-1)} of matrix_coalgebra(n).
CoefficientGrid standard_grid(std::size_t n, Backend b = Backend::GaussQ);

/// Residual-style verification of a grid: comultiplication and, if present, the involution swap.
CheckResult check_grid(const Coalgebra& c, const CoefficientGrid& grid);

Json to_json(const CoalgebraData& d);
CoalgebraData coalgebra_from_json(const Json& j);

}  // namespace cqg
