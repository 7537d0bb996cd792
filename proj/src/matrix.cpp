#include "cqg/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace cqg {

Matrix::Matrix(std::size_t rows, std::size_t cols, Backend b)
    : rows_(rows), cols_(cols), backend_(b), data_(rows * cols, Scalar::zero(b)) {}

Matrix Matrix::identity(std::size_t n, Backend b) {
  Matrix m(n, n, b);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(b);
  return m;
}

Matrix Matrix::from_eigen(const Eigen::MatrixXcd& e) {
  Matrix m(e.rows(), e.cols(), Backend::FloatC);
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = Scalar(e(i, j));
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
  if (v.empty()) throw std::invalid_argument("empty column");
  Matrix m(v.size(), 1, v[0].backend());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].backend() != m.backend_) throw BackendMismatch(m.backend_, v[i].backend());
    m(i, 0) = v[i];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, backend_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix c = *this;
  for (auto& x : c.data_) x = x.conj();
  return c;
}

Matrix Matrix::adjoint() const { return transpose().conj(); }

Matrix Matrix::col(std::size_t j) const { return block(0, j, rows_, 1); }

void Matrix::set_col(std::size_t j, const Matrix& v) {
  if (v.rows_ != rows_ || v.cols_ != 1) throw std::invalid_argument("set_col: shape mismatch");
  if (v.backend_ != backend_) throw BackendMismatch(backend_, v.backend_);
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  Matrix b(nr, nc, backend_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (cols_ == 0) return o;
  if (o.cols_ == 0) return *this;
  if (o.rows_ != rows_) throw std::invalid_argument("hcat: row mismatch");
  if (o.backend_ != backend_) throw BackendMismatch(backend_, o.backend_);
  Matrix m(rows_, cols_ + o.cols_, backend_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& o) const { return transpose().hcat(o.transpose()).transpose(); }

std::vector<Scalar> Matrix::to_vector() const { return data_; }

Matrix Matrix::to_backend(Backend b) const {
  Matrix m(rows_, cols_, b);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].to_backend(b);
  return m;
}

Eigen::MatrixXcd Matrix::to_eigen() const {
  Eigen::MatrixXcd e(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e(i, j) = (*this)(i, j).to_complex();
  return e;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(backend_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.backend_ != b.backend_) throw BackendMismatch(a.backend_, b.backend_);
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!(a.data_[k] == b.data_[k])) return false;
  return true;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(const Matrix& a) { return Matrix(a.rows(), a.cols(), a.backend()) - a; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  if (a.backend() != b.backend()) throw BackendMismatch(a.backend(), b.backend());
  if (a.backend() == Backend::FloatC) return Matrix::from_eigen(a.to_eigen() * b.to_eigen());
  Matrix c(a.rows(), b.cols(), a.backend());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

double frobenius(const Matrix& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j).to_complex());
  return std::sqrt(s);
}

double rel_residual(const Matrix& a, const Matrix& b) {
  if (a.is_exact() && b.backend() == a.backend() && a == b) return 0;
  Matrix fa = a.to_backend(Backend::FloatC), fb = b.to_backend(Backend::FloatC);
  return frobenius(fa - fb) / std::max(1.0, frobenius(fb));
}

bool approx_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.is_exact() && b.is_exact()) return a == b;
  return rel_residual(a, b) <= tolerance().residual;
}

// ---------------------------------------------------------------- elimination

namespace {

double max_abs(const Matrix& a) {
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, a(i, j).abs());
  return m;
}

Rref rref_exact(Matrix r) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
    std::size_t p = row;
    while (p < r.rows() && r(p, c).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
    Scalar inv = Scalar::one(r.backend()) / r(row, c);
    for (std::size_t j = c; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c).is_zero()) continue;
      Scalar f = r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j)
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

Rref rref_float(const Matrix& a) {
  Eigen::MatrixXcd r = a.to_eigen();
  const double thresh = tolerance().eq * std::max(1.0, max_abs(a));
  std::vector<std::size_t> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < r.cols() && row < r.rows(); ++c) {
    Eigen::Index p;
    double best = r.col(c).tail(r.rows() - row).cwiseAbs().maxCoeff(&p);
    p += row;
    if (best <= thresh) {
      r.col(c).tail(r.rows() - row).setZero();
      continue;
    }
    r.row(p).swap(r.row(row));
    r.row(row) /= r(row, c);
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      r.row(i) -= r(i, c) * r.row(row);
      r(i, c) = 0;
    }
    pivots.push_back(c);
    ++row;
  }
  return {Matrix::from_eigen(r), std::move(pivots)};
}

}  // namespace

Rref rref(const Matrix& a) {
  if (a.backend() == Backend::Laurent) throw std::domain_error("elimination over the Laurent backend is not supported");
  return a.is_exact() ? rref_exact(a) : rref_float(a);
}

std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  if (a.is_exact()) return rref(a).pivots.size();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.to_eigen());
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  // relative to the largest singular value, but never finer than eq itself
  const double cut = tolerance().eq * std::max(1.0, s(0));
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

Matrix canonical_basis(const Matrix& a) {
  if (a.cols() == 0) return a;
  Rref rr = rref(a.transpose());
  std::size_t k = rr.pivots.size();
  return rr.r.block(0, 0, k, a.rows()).transpose();
}

Matrix column_basis(const Matrix& a) { return canonical_basis(a); }

Matrix nullspace(const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.is_exact()) {
    Rref rr = rref(a);
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    Matrix basis(n, n - rr.pivots.size(), a.backend());
    std::size_t col = 0;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      basis(f, col) = Scalar::one(a.backend());
      for (std::size_t r = 0; r < rr.pivots.size(); ++r) basis(rr.pivots[r], col) = -rr.r(r, f);
      ++col;
    }
    return canonical_basis(basis);
  }
  Eigen::MatrixXcd e = a.to_eigen();
  if (e.rows() < e.cols()) {
    Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(e.cols(), e.cols());
    padded.topRows(e.rows()) = e;
    e = padded;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = tolerance().eq * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  if (static_cast<std::size_t>(r) == n) return Matrix(n, 0, Backend::FloatC);
  return canonical_basis(Matrix::from_eigen(svd.matrixV().rightCols(n - r)));
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (!a.is_exact()) {
    if (rank(a) < n) throw std::domain_error("singular matrix");
    return Matrix::from_eigen(a.to_eigen().partialPivLu().inverse());
  }
  Rref rr = rref(a.hcat(Matrix::identity(n, a.backend())));
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  return rr.r.block(0, n, n, n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  if (!a.is_exact()) {
    Eigen::MatrixXcd ea = a.to_eigen(), eb = b.to_eigen();
    Eigen::MatrixXcd x = ea.completeOrthogonalDecomposition().solve(eb);
    if ((ea * x - eb).norm() > tolerance().residual * std::max(1.0, eb.norm())) return std::nullopt;
    return Matrix::from_eigen(x);
  }
  Rref rr = rref(a.hcat(b));
  Matrix x(n, b.cols(), a.backend());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[r], j) = rr.r(r, n + j);
  }
  return x;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::optional<Backend> expect) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const std::size_t r = j.size(), c = j[0].size();
  Backend b = expect ? *expect : scalar_from_json(j[0][0]).backend();
  Matrix m(r, c, b);
  for (std::size_t i = 0; i < r; ++i) {
    if (j[i].size() != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) {
      Scalar x = scalar_from_json(j[i][k]);
      if (x.backend() != b) x = x.to_backend(b);
      m(i, k) = x;
    }
  }
  return m;
}

}  // namespace cqg
