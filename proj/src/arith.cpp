#include "cqg/arith.hpp"

#include <cmath>
#include <sstream>

namespace cqg {

namespace {
Tolerance g_tolerance;

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}
}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::GaussQ: return "gaussq";
    case Backend::Laurent: return "laurent";
    case Backend::FloatC: return "float";
  }
  return "?";
}

BackendMismatch::BackendMismatch(Backend a, Backend b)
    : std::invalid_argument(std::string("backend mismatch: ") + backend_name(a) + " vs " + backend_name(b)) {}

const Tolerance& tolerance() { return g_tolerance; }
void set_tolerance(const Tolerance& t) { g_tolerance = t; }

// ---------------------------------------------------------------- GaussQ

GaussQ::GaussQ(Rational r, Rational i) : re(canonical(std::move(r))), im(canonical(std::move(i))) {}

GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
GaussQ operator*(const GaussQ& a, const GaussQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussQ operator/(const GaussQ& a, const GaussQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Rational n = b.norm2();
  GaussQ num = a * b.conj();
  return {num.re / n, num.im / n};
}
bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(Rational c, int exponent) { add_term(exponent, c); }

Laurent::Laurent(std::map<int, Rational> terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

void Laurent::add_term(int exponent, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, canonical(c));
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rational Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::inverse() const {
  if (!is_monomial()) throw std::domain_error("Laurent inverse of a non-monomial: " + str());
  const auto& [e, c] = *terms_.begin();
  return Laurent(1 / c, -e);
}

double Laurent::evaluate(double s) const {
  double v = 0;
  for (const auto& [e, c] : terms_) v += c.get_d() * std::pow(s, e);
  return v;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "s";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
Laurent operator-(const Laurent& a) { return Laurent() - a; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  std::map<int, Rational> out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out[ea + eb] += ca * cb;
  }
  return Laurent(std::move(out));
}

Laurent pow(const Laurent& a, int e) {
  Laurent base = e < 0 ? a.inverse() : a;
  Laurent r(1);
  for (int i = 0; i < std::abs(e); ++i) r = r * base;
  return r;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::zero(Backend b) {
  switch (b) {
    case Backend::GaussQ: return Scalar(GaussQ{});
    case Backend::Laurent: return Scalar(Laurent{});
    case Backend::FloatC: return Scalar(FloatC{});
  }
  return {};
}

Scalar Scalar::one(Backend b) { return from_int(1, b); }

Scalar Scalar::from_int(long v, Backend b) { return from_rational(Rational(v), b); }

Scalar Scalar::from_rational(const Rational& q, Backend b) {
  switch (b) {
    case Backend::GaussQ: return Scalar(GaussQ(q));
    case Backend::Laurent: return Scalar(Laurent(q));
    case Backend::FloatC: return Scalar(FloatC(q.get_d(), 0));
  }
  return {};
}

bool Scalar::is_zero() const {
  switch (backend()) {
    case Backend::GaussQ: return as_gauss().is_zero();
    case Backend::Laurent: return as_laurent().is_zero();
    case Backend::FloatC: return std::abs(as_float()) <= tolerance().eq;
  }
  return false;
}

Scalar Scalar::conj() const {
  switch (backend()) {
    case Backend::GaussQ: return Scalar(as_gauss().conj());
    case Backend::Laurent: return *this;  // s is real
    case Backend::FloatC: return Scalar(std::conj(as_float()));
  }
  return *this;
}

FloatC Scalar::to_complex() const {
  switch (backend()) {
    case Backend::GaussQ: return {as_gauss().re.get_d(), as_gauss().im.get_d()};
    case Backend::FloatC: return as_float();
    case Backend::Laurent: {
      const Laurent& l = as_laurent();
      if (l.is_zero()) return {};
      if (l.terms().size() == 1 && l.terms().begin()->first == 0) return {l.terms().begin()->second.get_d(), 0};
      throw std::domain_error("Laurent value has no complex value without s: " + l.str());
    }
  }
  return {};
}

Scalar Scalar::to_backend(Backend b) const {
  if (b == backend()) return *this;
  if (b == Backend::FloatC) return Scalar(to_complex());
  if (backend() == Backend::GaussQ && b == Backend::Laurent) {
    if (sgn(as_gauss().im) != 0) throw std::domain_error("Laurent backend has no imaginary unit");
    return Scalar(Laurent(as_gauss().re));
  }
  if (backend() == Backend::Laurent && b == Backend::GaussQ) {
    const Laurent& l = as_laurent();
    if (l.is_zero()) return Scalar(GaussQ{});
    if (l.terms().size() == 1 && l.terms().begin()->first == 0) return Scalar(GaussQ(l.terms().begin()->second));
    throw std::domain_error("Laurent value is not a constant: " + l.str());
  }
  throw std::domain_error(std::string("no exact conversion from ") + backend_name(backend()) + " to " + backend_name(b));
}

#define CQG_SAME_BACKEND(a, b) \
  if ((a).backend() != (b).backend()) throw BackendMismatch((a).backend(), (b).backend())

Scalar& Scalar::operator+=(const Scalar& o) {
  CQG_SAME_BACKEND(*this, o);
  std::visit(
      [&o](auto& x) {
        using T = std::decay_t<decltype(x)>;
        x = x + std::get<T>(o.v_);
      },
      v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  CQG_SAME_BACKEND(*this, o);
  std::visit(
      [&o](auto& x) {
        using T = std::decay_t<decltype(x)>;
        x = x - std::get<T>(o.v_);
      },
      v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  CQG_SAME_BACKEND(*this, o);
  std::visit(
      [&o](auto& x) {
        using T = std::decay_t<decltype(x)>;
        x = x * std::get<T>(o.v_);
      },
      v_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  CQG_SAME_BACKEND(*this, o);
  switch (backend()) {
    case Backend::GaussQ: v_ = as_gauss() / o.as_gauss(); break;
    case Backend::Laurent: v_ = as_laurent() * o.as_laurent().inverse(); break;
    case Backend::FloatC:
      if (o.as_float() == FloatC{}) throw std::domain_error("division by zero");
      v_ = as_float() / o.as_float();
      break;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  CQG_SAME_BACKEND(a, b);
  switch (a.backend()) {
    case Backend::GaussQ: return a.as_gauss() == b.as_gauss();
    case Backend::Laurent: return a.as_laurent() == b.as_laurent();
    case Backend::FloatC: return std::abs(a.as_float() - b.as_float()) <= tolerance().eq;
  }
  return false;
}

#undef CQG_SAME_BACKEND

std::string Scalar::str() const {
  switch (backend()) {
    case Backend::GaussQ: {
      const GaussQ& g = as_gauss();
      if (sgn(g.im) == 0) return g.re.get_str();
      if (sgn(g.re) == 0) return g.im.get_str() + "i";
      return "(" + g.re.get_str() + (sgn(g.im) < 0 ? "-" : "+") + Rational(::abs(g.im)).get_str() + "i)";
    }
    case Backend::Laurent: return as_laurent().str();
    case Backend::FloatC: {
      std::ostringstream os;
      os.precision(12);
      FloatC f = as_float();
      os << "(" << f.real() << (f.imag() < 0 ? "-" : "+") << std::abs(f.imag()) << "i)";
      return os.str();
    }
  }
  return "?";
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator-(const Scalar& a) { return Scalar::zero(a.backend()) - a; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

Scalar laurent_mu(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("laurent_mu: sign must be +1 or -1");
  return Scalar(Laurent(Rational(sign), 2));
}

Rational rationalize(double x, long max_den) {
  // continued-fraction convergents
  long sign = x < 0 ? -1 : 1;
  double v = std::abs(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(v);
    mpz_class ai(static_cast<long>(a));
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = v - a;
    if (frac < 1e-15) break;
    v = 1 / frac;
    if (v > 1e15) break;
  }
  Rational r(p1 * sign, q1);
  r.canonicalize();
  return r;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  mpz_class rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

// ---------------------------------------------------------------- JSON

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational: " + j.dump());
    q.canonicalize();
    return q;
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational \"p/q\", got " + j.dump());
}

Json to_json(const Scalar& x) {
  switch (x.backend()) {
    case Backend::GaussQ: return Json{{"re", x.as_gauss().re.get_str()}, {"im", x.as_gauss().im.get_str()}};
    case Backend::Laurent: {
      Json terms = Json::object();
      for (const auto& [e, c] : x.as_laurent().terms()) terms[std::to_string(e)] = c.get_str();
      return Json{{"s", terms}};
    }
    case Backend::FloatC: return Json::array({x.as_float().real(), x.as_float().imag()});
  }
  return nullptr;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("float scalar must be [re, im]: " + j.dump());
    return Scalar::floatc(j[0].get<double>(), j[1].get<double>());
  }
  if (j.is_object() && j.contains("s")) {
    std::map<int, Rational> terms;
    for (const auto& [k, v] : j.at("s").items()) terms[std::stoi(k)] = rational_from_json(v);
    return Scalar(Laurent(std::move(terms)));
  }
  if (j.is_object() && j.contains("re")) {
    Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return Scalar::gauss(rational_from_json(j.at("re")), im);
  }
  throw std::invalid_argument("unrecognized scalar encoding: " + j.dump());
}

}  // namespace cqg
