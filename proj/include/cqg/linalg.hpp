#pragma once

// Operator calculus relative to a Gram form <x, y> = y^H G x.

#include <utility>
#include <vector>

#include "cqg/matrix.hpp"

namespace cqg {

using LinOp = Matrix;
using GramForm = Matrix;

/// Conjugate-linear operator x -> M conj(x).
struct ConjLinOp {
  Matrix m;

  Matrix apply(const Matrix& x) const { return m * x.conj(); }
  bool is_involutive() const;
};

/// (a o b)(x) = a(b(x)) for the four linear/conjugate-linear combinations.
LinOp compose(const ConjLinOp& a, const ConjLinOp& b);
ConjLinOp compose(const LinOp& a, const ConjLinOp& b);
ConjLinOp compose(const ConjLinOp& a, const LinOp& b);

/// G^{-1} A^H G. Throws "degenerate form" for singular G.
LinOp gram_adjoint(const LinOp& a, const GramForm& g);
/// G A = A^H G, exactly or within the residual tolerance.
bool is_self_adjoint(const LinOp& a, const GramForm& g);

/// Unique G-positive square root. Exact inputs need perfect-square rational
/// eigenvalues; anything else should be converted to FloatC first.
LinOp positive_sqrt(const LinOp& a, const GramForm& g);
/// Unique G-positive p-th root (p >= 1), float backend only.
LinOp positive_root(const LinOp& a, const GramForm& g, int p);

struct Polar {
  LinOp u;  // G-unitary
  LinOp p;  // G-positive
};
/// A = U P with P = positive_sqrt(A^dagger A).
Polar polar_right(const LinOp& a, const GramForm& g);

struct Eigenspace {
  Scalar value;
  Matrix basis;  // columns
};

/// Eigenvalues with eigenspace bases, sorted. Exact inputs stay exact when
/// every eigenvalue is a Gaussian rational and otherwise come back as FloatC.
std::vector<Eigenspace> eigensplit(const LinOp& a);

struct HermitianSpectrum {
  std::vector<double> values;  // ascending
  Eigen::MatrixXcd vectors;    // columns, matching values
};
/// Eigenvalues of a hermitian matrix (computed in floating point).
HermitianSpectrum hermitian_spectrum(const Matrix& h);

}  // namespace cqg
