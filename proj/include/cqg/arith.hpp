#pragma once

// Scalar backends: exact Gaussian rationals, exact Laurent polynomials in a
// real positive variable s, and complex doubles compared with a tolerance.

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace cqg {

using Rational = mpq_class;
using Json = nlohmann::json;

enum class Backend { GaussQ, Laurent, FloatC };

const char* backend_name(Backend b);

/// Raised whenever two values from different backends meet.
class BackendMismatch : public std::invalid_argument {
 public:
  BackendMismatch(Backend a, Backend b);
};

struct Tolerance {
  double eq = 1e-9;        // |a - b| <= eq counts as equal for FloatC
  double residual = 1e-8;  // operator residual norms
};

/// Process-wide tolerance. Set it once at startup, before any parallel work.
const Tolerance& tolerance();
void set_tolerance(const Tolerance& t);

struct GaussQ {
  Rational re;
  Rational im;

  GaussQ() = default;
  GaussQ(Rational r, Rational i = 0);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussQ conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
};

GaussQ operator+(const GaussQ& a, const GaussQ& b);
GaussQ operator-(const GaussQ& a, const GaussQ& b);
GaussQ operator-(const GaussQ& a);
GaussQ operator*(const GaussQ& a, const GaussQ& b);
GaussQ operator/(const GaussQ& a, const GaussQ& b);
bool operator==(const GaussQ& a, const GaussQ& b);

/// Element of Q[s, 1/s]. Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(Rational c, int exponent = 0);
  explicit Laurent(std::map<int, Rational> terms);

  static Laurent monomial(int exponent, Rational c = 1) { return Laurent(std::move(c), exponent); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coeff(int exponent) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);

  /// Inverse of a monomial c·s^k. Anything else throws std::domain_error.
  Laurent inverse() const;
  /// Value at a concrete s > 0.
  double evaluate(double s) const;

  std::string str() const;

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int exponent, const Rational& c);
  std::map<int, Rational> terms_;
};

Laurent operator+(Laurent a, const Laurent& b);
Laurent operator-(Laurent a, const Laurent& b);
Laurent operator-(const Laurent& a);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent pow(const Laurent& a, int e);

using FloatC = std::complex<double>;

/// A tagged number. Arithmetic between different backends throws
/// BackendMismatch; conversions are explicit through to_backend().
class Scalar {
 public:
  Scalar() : v_(GaussQ{}) {}
  Scalar(GaussQ g) : v_(std::move(g)) {}
  Scalar(Laurent l) : v_(std::move(l)) {}
  Scalar(FloatC f) : v_(f) {}

  static Scalar gauss(Rational re, Rational im = 0) { return Scalar(GaussQ(std::move(re), std::move(im))); }
  static Scalar floatc(double re, double im = 0) { return Scalar(FloatC(re, im)); }
  static Scalar zero(Backend b);
  static Scalar one(Backend b);
  static Scalar from_int(long v, Backend b);
  static Scalar from_rational(const Rational& q, Backend b);

  Backend backend() const { return static_cast<Backend>(v_.index()); }
  bool is_exact() const { return backend() != Backend::FloatC; }

  const GaussQ& as_gauss() const { return std::get<GaussQ>(v_); }
  const Laurent& as_laurent() const { return std::get<Laurent>(v_); }
  FloatC as_float() const { return std::get<FloatC>(v_); }

  /// Exactly zero, or within tolerance().eq for FloatC.
  bool is_zero() const;
  Scalar conj() const;
  /// Complex value; Laurent values need evaluate() instead.
  FloatC to_complex() const;
  double abs() const { return std::abs(to_complex()); }
  Scalar to_backend(Backend b) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  std::variant<GaussQ, Laurent, FloatC> v_;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator-(const Scalar& a);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);

inline Scalar scalar_conj(const Scalar& x) { return x.conj(); }

/// mu = sign * s^2 in the Laurent backend.
Scalar laurent_mu(int sign);

/// Best rational approximation with denominator <= max_den.
Rational rationalize(double x, long max_den = 1000000);
/// Exact square root of a non-negative rational, if it is a perfect square.
bool rational_sqrt(const Rational& q, Rational& root);

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);
/// Parses "p/q", "p", or a JSON number into a rational.
Rational rational_from_json(const Json& j);

}  // namespace cqg
