#pragma once

// Dense matrices of Scalars with exact elimination (GaussQ) and
// SVD-thresholded elimination (FloatC).

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cqg/arith.hpp"

namespace cqg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Backend b);

  static Matrix identity(std::size_t n, Backend b);
  static Matrix zero(std::size_t rows, std::size_t cols, Backend b) { return Matrix(rows, cols, b); }
  static Matrix from_eigen(const Eigen::MatrixXcd& m);
  /// Column vector.
  static Matrix column(const std::vector<Scalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Backend backend() const { return backend_; }
  bool is_exact() const { return backend_ != Backend::FloatC; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix conj() const;
  /// Conjugate transpose.
  Matrix adjoint() const;
  Matrix col(std::size_t j) const;
  void set_col(std::size_t j, const Matrix& v);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Columns of *this followed by columns of o.
  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;
  std::vector<Scalar> to_vector() const;

  Matrix to_backend(Backend b) const;
  Eigen::MatrixXcd to_eigen() const;

  bool is_zero() const;
  /// Trace.
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Backend backend_ = Backend::GaussQ;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

/// Frobenius norm (FloatC and GaussQ).
double frobenius(const Matrix& a);
/// ||a - b||_F / max(1, ||b||_F).
double rel_residual(const Matrix& a, const Matrix& b);
/// Exact equality for exact backends, rel_residual <= tolerance().residual otherwise.
bool approx_equal(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix r;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Float pivots below tau * max|entry| count as zero.
Rref rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Basis of {x : a x = 0} as columns, in canonical reduced form.
Matrix nullspace(const Matrix& a);
/// Canonical basis (columns) of the column space of a.
Matrix column_basis(const Matrix& a);
/// Canonical reduced basis of the span of the columns of a: the unique basis
/// whose transpose is in reduced row echelon form.
Matrix canonical_basis(const Matrix& a);
Matrix inverse(const Matrix& a);
/// Some x with a x = b, or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::optional<Backend> expect = std::nullopt);

}  // namespace cqg
