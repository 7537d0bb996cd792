#pragma once

// Finite-dimensional Hopf algebras with a multiplicative, anticomultiplicative
// involution: integrals, Gram forms, and the antipode calculus built on them.

#include <memory>
#include <mutex>

#include "cqg/coalgebra.hpp"

namespace cqg {

/// One term c * e_k of a product e_i e_j.
struct MultTerm {
  std::size_t k;
  Scalar c;
};

struct HopfData {
  CoalgebraData coalgebra;
  std::vector<std::vector<std::vector<MultTerm>>> mult;  // mult[i][j] = e_i e_j
  Matrix unit;                                           // n x 1
  Matrix antipode;                                       // column j = S(e_j)

  std::size_t dim() const { return coalgebra.dim(); }
};

CheckResult check_hopf_shape(const HopfData& h);
CheckResult check_associative(const HopfData& h);
CheckResult check_unit(const HopfData& h);
CheckResult check_delta_multiplicative(const HopfData& h);
CheckResult check_eps_multiplicative(const HopfData& h);
CheckResult check_antipode(const HopfData& h);
CheckResult check_circ_multiplicative(const HopfData& h);
CheckResult check_circ_unit(const HopfData& h);
CheckResult check_circ_antipode(const HopfData& h);
/// Coalgebra checks followed by the Hopf and involution checks.
std::vector<CheckResult> check_hopf(const HopfData& h);

/// Linear functionals are 1 x n rows.
using Functional = Matrix;

/// x -> sum f(x_1) x_2
LinOp conv_left(const Coalgebra& c, const Functional& f);
/// x -> sum x_1 f(x_2)
LinOp conv_right(const Coalgebra& c, const Functional& f);
/// Convolution inverse in the dual algebra; throws if f is not invertible.
Functional convolution_inverse(const Coalgebra& c, const Functional& f);
/// The subcoalgebra spanned by the columns of basis, in those coordinates.
/// The involution is carried over when the span is stable under it.
Coalgebra subcoalgebra(const Coalgebra& c, const Matrix& basis);

struct CompactVerdict {
  bool compact = false;
  std::string reason;        // empty when compact
  double min_eigenvalue = 0; // of the Gram form, when computed
  std::vector<double> eigenvalues;
  Matrix witness;            // non-positive eigenvector, when any
};

struct Nakayama {
  LinOp n;         // phi(xy) = phi(y N(x))
  Functional alpha;
  Matrix g;        // sum x_1 phi(x_2) = phi(x) g
};

struct Residual {
  std::string name;
  double residual = 0;
  bool passed = true;
};

struct Battery {
  std::vector<std::pair<std::string, bool>> flags;
  bool consistent = true;
  bool all_true() const;
};

class HopfAlgebra {
 public:
  explicit HopfAlgebra(HopfData d);

  const HopfData& data() const { return d_; }
  const Coalgebra& coalgebra() const { return coalg_; }
  std::size_t dim() const { return coalg_.dim(); }
  Backend backend() const { return coalg_.backend(); }
  bool has_circ() const { return coalg_.has_circ(); }

  Matrix product(const Matrix& x, const Matrix& y) const;
  /// Matrix of y -> x y.
  LinOp left_mult(const Matrix& x) const;
  const Matrix& unit() const { return d_.unit; }
  const LinOp& antipode() const { return d_.antipode; }
  Matrix basis_vector(std::size_t k) const;

  /// Same algebra with another involution (validated).
  HopfAlgebra with_circ(const Matrix& circ) const;

  // Cached structure. Each getter computes once and then shares the result.
  const Functional& integral() const;
  const Matrix& gram() const;
  const std::vector<SimpleComponent>& components() const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<Functional> integral;
    std::optional<Matrix> gram;
    std::optional<std::vector<SimpleComponent>> components;
  };

  HopfData d_;
  Coalgebra coalg_;
  std::shared_ptr<Cache> cache_;
};

/// Unique normal two-sided integral. Errors: "no normal integral (not cosemisimple)",
/// "integral not unique".
Functional solve_integral(const HopfAlgebra& h);
/// Same integral obtained from the simple decomposition: the projection onto the
/// trivial component. Used as an independent cross-check.
Functional integral_via_decomposition(const HopfAlgebra& h);
/// G with <x, y> = y^H G x = phi(S(y°) x).
Matrix gram_from_integral(const HopfAlgebra& h);
CompactVerdict is_compact(const HopfAlgebra& h);

LinOp positive_antipode(const HopfAlgebra& h);
Nakayama nakayama(const HopfAlgebra& h);
LinOp nakayama_sqrt(const HopfAlgebra& h);

/// For a coalgebra automorphism T of a simple coalgebra D, a functional tau with
/// T = (tau * id)(id * tau^{-1}). Throws "automorphism not inner".
struct AlbertResult {
  Functional tau;
  Functional tau_inv;
  double residual = 0;
};
AlbertResult albert_tau(const Coalgebra& d, const LinOp& t);

/// beta with S+ = (beta * id)(id * beta^{-1}), beta^4 = alpha, normalized per component.
Functional compute_beta(const HopfAlgebra& h);
LinOp antipode_adjoint(const HopfAlgebra& h);
LinOp unitary_antipode(const HopfAlgebra& h);

/// The eight equivalent conditions for a trivial antipode square.
Battery trivial_antipode_report(const HopfAlgebra& h);
/// The five equivalent conditions for a trivial modular function.
Battery additional_report(const HopfAlgebra& h);
std::vector<Residual> radford_check(const HopfAlgebra& h);
/// Post-conditions of the operators above (automorphism properties etc).
std::vector<Residual> antipode_postconditions(const HopfAlgebra& h);

struct ConjugacyResult {
  LinOp q;  // diamond o circ
  LinOp p;
  std::vector<Residual> checks;
  bool diamond_compact = false;
};

/// Coalgebra-level conjugacy of two involutions. circ must be compact with
/// respect to the positive form g; q = diamond circ must be g-self-adjoint.
/// With diamond_compact set, also verifies diamond = P circ P^{-1} and P^2 = Q.
ConjugacyResult conjugate_involutions(const Coalgebra& c, const Matrix& g, const ConjLinOp& diamond,
                                      bool diamond_compact);
/// Hopf-level wrapper: validates diamond as an involution of h and decides its compactness.
ConjugacyResult conjugate_involutions(const HopfAlgebra& h, const ConjLinOp& diamond);

Json to_json(const HopfData& h);
HopfData hopf_from_json(const Json& j);

}  // namespace cqg
