#include "cqg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace cqg {

bool ConjLinOp::is_involutive() const {
  return approx_equal(m * m.conj(), Matrix::identity(m.rows(), m.backend()));
}

LinOp compose(const ConjLinOp& a, const ConjLinOp& b) { return a.m * b.m.conj(); }
ConjLinOp compose(const LinOp& a, const ConjLinOp& b) { return {a * b.m}; }
ConjLinOp compose(const ConjLinOp& a, const LinOp& b) { return {a.m * b.conj()}; }

LinOp gram_adjoint(const LinOp& a, const GramForm& g) {
  Matrix gi;
  try {
    gi = inverse(g);
  } catch (const std::domain_error&) {
    throw std::domain_error("degenerate form");
  }
  return gi * a.adjoint() * g;
}

bool is_self_adjoint(const LinOp& a, const GramForm& g) { return approx_equal(g * a, a.adjoint() * g); }

HermitianSpectrum hermitian_spectrum(const Matrix& h) {
  Eigen::MatrixXcd e = h.to_eigen();
  e = (e + e.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e);
  HermitianSpectrum out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.values.push_back(es.eigenvalues()(i));
  out.vectors = es.eigenvectors();
  return out;
}

// ---------------------------------------------------------------- eigensplit

namespace {

constexpr double kCluster = 1e-7;

struct Cluster {
  FloatC center;
  std::vector<Eigen::Index> members;
};

std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXcd& vals) {
  std::vector<Eigen::Index> order(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) {
    if (vals(x).real() != vals(y).real()) return vals(x).real() < vals(y).real();
    return vals(x).imag() < vals(y).imag();
  });
  std::vector<Cluster> out;
  for (auto i : order) {
    bool placed = false;
    for (auto& c : out) {
      if (std::abs(vals(i) - c.center) <= kCluster * std::max(1.0, std::abs(c.center))) {
        c.members.push_back(i);
        FloatC sum = 0;
        for (auto m : c.members) sum += vals(m);
        c.center = sum / static_cast<double>(c.members.size());
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({vals(i), {i}});
  }
  return out;
}

bool eigen_less(const FloatC& a, const FloatC& b) {
  double ra = std::round(a.real() / kCluster), rb = std::round(b.real() / kCluster);
  if (ra != rb) return ra < rb;
  return std::round(a.imag() / kCluster) < std::round(b.imag() / kCluster);
}

std::optional<std::vector<Eigenspace>> exact_split(const LinOp& a, const std::vector<Cluster>& clusters) {
  const std::size_t n = a.rows();
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (const auto& c : clusters) {
    Scalar lambda = Scalar::gauss(rationalize(c.center.real()), rationalize(c.center.imag()));
    if (a.backend() != Backend::GaussQ) return std::nullopt;
    Matrix shifted = a - lambda * Matrix::identity(n, a.backend());
    Matrix ker = nullspace(shifted);
    if (ker.cols() != c.members.size()) return std::nullopt;
    total += ker.cols();
    out.push_back({lambda, ker});
  }
  if (total != n) return std::nullopt;
  return out;
}

std::vector<Eigenspace> float_split(const LinOp& a, const Eigen::ComplexEigenSolver<Eigen::MatrixXcd>& es,
                                    const std::vector<Cluster>& clusters) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.rows());
  std::vector<Eigenspace> out;
  Eigen::MatrixXcd v(n, n);
  Eigen::VectorXcd d(n);
  Eigen::Index col = 0;
  for (const auto& c : clusters) {
    Eigen::MatrixXcd block(n, c.members.size());
    for (std::size_t k = 0; k < c.members.size(); ++k) block.col(k) = es.eigenvectors().col(c.members[k]).normalized();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block);
    const auto& s = svd.singularValues();
    for (Eigen::Index k = 0; k < s.size(); ++k)
      if (s(k) <= 1e-6 * s(0)) throw std::domain_error("not diagonalizable at tolerance");
    Matrix basis = canonical_basis(Matrix::from_eigen(block));
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      v.col(col) = basis.col(k).to_eigen();
      d(col) = c.center;
      ++col;
    }
    out.push_back({Scalar(c.center), basis});
  }
  Eigen::MatrixXcd ea = a.to_eigen();
  Eigen::MatrixXcd re = v * d.asDiagonal() * v.inverse();
  if ((re - ea).norm() > tolerance().residual * std::max(1.0, ea.norm()))
    throw std::domain_error("not diagonalizable at tolerance");
  return out;
}

}  // namespace

std::vector<Eigenspace> eigensplit(const LinOp& a) {
  if (!a.is_square()) throw std::invalid_argument("eigensplit of a non-square matrix");
  if (a.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a.to_eigen());
  if (es.info() != Eigen::Success) throw std::domain_error("eigen solver failed");
  auto clusters = cluster_eigenvalues(es.eigenvalues());
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& x, const Cluster& y) { return eigen_less(x.center, y.center); });
  if (a.is_exact()) {
    if (auto ex = exact_split(a, clusters)) return *ex;
  }
  return float_split(a, es, clusters);
}

// ---------------------------------------------------------------- roots

namespace {

void require_positive_definite_form(const GramForm& g) {
  if (!approx_equal(g, g.adjoint())) throw std::domain_error("degenerate form: Gram matrix is not hermitian");
  auto spec = hermitian_spectrum(g);
  if (spec.values.empty() || spec.values.front() <= tolerance().eq * std::max(1.0, std::abs(spec.values.back())))
    throw std::domain_error("degenerate form");
}

LinOp positive_function_float(const LinOp& a, const GramForm& g, const std::function<double(double)>& f) {
  require_positive_definite_form(g);
  Eigen::MatrixXcd ea = a.to_eigen(), eg = g.to_eigen();
  eg = (eg + eg.adjoint()) / 2.0;
  if ((eg * ea - ea.adjoint() * eg).norm() > tolerance().residual * std::max(1.0, (eg * ea).norm()))
    throw std::domain_error("operator not self-adjoint");
  Eigen::LLT<Eigen::MatrixXcd> llt(eg);
  if (llt.info() != Eigen::Success) throw std::domain_error("degenerate form");
  Eigen::MatrixXcd lh = llt.matrixU();  // G = lh^H lh
  // at = lh A lh^{-1} is hermitian
  Eigen::MatrixXcd at = lh.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(lh * ea);
  at = (at + at.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(at);
  const auto& lam = es.eigenvalues();
  double lmax = lam.cwiseAbs().maxCoeff();
  // roundoff level: small but resolved eigenvalues still count as positive
  const double floor = std::numeric_limits<double>::epsilon() * static_cast<double>(lam.size()) * std::max(1.0, lmax);
  if (lam(0) <= floor) throw std::domain_error("operator not positive");
  Eigen::VectorXcd fl(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) fl(i) = f(lam(i));
  Eigen::MatrixXcd pt = es.eigenvectors() * fl.asDiagonal() * es.eigenvectors().adjoint();
  Eigen::MatrixXcd p = lh.triangularView<Eigen::Upper>().solve(pt * lh);
  return Matrix::from_eigen(p);
}

}  // namespace

LinOp positive_sqrt(const LinOp& a, const GramForm& g) {
  if (!a.is_square() || a.rows() != g.rows()) throw std::invalid_argument("positive_sqrt: shape mismatch");
  if (a.backend() != g.backend()) throw BackendMismatch(a.backend(), g.backend());
  if (!a.is_exact()) return positive_function_float(a, g, [](double x) { return std::sqrt(x); });

  require_positive_definite_form(g);
  if (!is_self_adjoint(a, g)) throw std::domain_error("operator not self-adjoint");
  auto split = eigensplit(a);
  const std::size_t n = a.rows();
  Matrix v(n, 0, a.backend()), d(n, n, a.backend());
  std::size_t col = 0;
  for (const auto& es : split) {
    if (!es.value.is_exact())
      throw std::domain_error("exact positive_sqrt needs rational eigenvalues; convert to the float backend");
    const GaussQ& lam = es.value.as_gauss();
    if (sgn(lam.im) != 0 || sgn(lam.re) <= 0) throw std::domain_error("operator not positive");
    Rational root;
    if (!rational_sqrt(lam.re, root))
      throw std::domain_error("eigenvalue " + lam.re.get_str() + " is not a perfect square; convert to the float backend");
    v = v.hcat(es.basis);
    for (std::size_t k = 0; k < es.basis.cols(); ++k, ++col) d(col, col) = Scalar::gauss(root);
  }
  return v * d * inverse(v);
}

LinOp positive_root(const LinOp& a, const GramForm& g, int p) {
  if (p < 1) throw std::invalid_argument("positive_root: p must be >= 1");
  if (a.is_exact() && p == 2) return positive_sqrt(a, g);
  Matrix fa = a.to_backend(Backend::FloatC), fg = g.to_backend(Backend::FloatC);
  return positive_function_float(fa, fg, [p](double x) { return std::pow(x, 1.0 / p); });
}

Polar polar_right(const LinOp& a, const GramForm& g) {
  if (rank(a) < a.rows()) throw std::domain_error("polar_right: singular operator");
  LinOp p = positive_sqrt(gram_adjoint(a, g) * a, g);
  return {a * inverse(p), p};
}

}  // namespace cqg
