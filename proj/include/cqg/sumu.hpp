#pragma once

// Exact rewriting engine for SU_mu(2) with mu = sign * s^2, coefficients in Q[s, 1/s].
//
// Generators: a (alpha), h (alpha hat), c (gamma), d (gamma°).
// Canonical words: a^k c^m d^n, or h^k c^m d^n with k >= 1.

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "cqg/arith.hpp"

namespace cqg::sumu {

enum class Gen : unsigned char { A, H, C, D };
using Word = std::vector<Gen>;

struct Mono {
  bool hat = false;
  int k = 0, m = 0, n = 0;

  int degree() const { return k + m + n; }
  Word word() const;
  auto operator<=>(const Mono&) const = default;
};

using Poly = std::map<Mono, Laurent>;
using Tensor2 = std::map<std::pair<Mono, Mono>, Laurent>;
using Tensor3 = std::map<std::tuple<Mono, Mono, Mono>, Laurent>;

/// Value of a functional on canonical words.
using Functional = std::function<Laurent(const Mono&)>;
/// A linear operator on the algebra, given on canonical words.
using Op = std::function<Poly(const Mono&)>;

std::string to_string(Gen g);
std::string to_string(const Word& w);
std::string to_string(const Mono& m);
std::string to_string(const Poly& p);

Poly monomial(const Mono& m, Laurent c = Laurent(1));
Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly scale(const Laurent& c, Poly p);

class Engine {
 public:
  /// sign = +1 or -1; mu = sign * s^2.
  explicit Engine(int sign);

  int sign() const { return sign_; }
  Laurent mu(int power = 1) const;
  Laurent s(int power) const { return Laurent::monomial(power); }

  // rewriting
  bool is_canonical(const Word& w) const;
  /// All positions where a rule applies.
  std::vector<std::size_t> redexes(const Word& w) const;
  /// One rewrite step at a redex.
  std::vector<std::pair<Laurent, Word>> rewrite_at(const Word& w, std::size_t pos) const;
  /// Termination measure: (number of a/h letters, number of misordered pairs).
  static std::pair<int, int> measure(const Word& w);
  Poly normalize(const Word& w) const;

  Poly mul(const Poly& x, const Poly& y) const;
  Tensor2 tensor_mul(const Tensor2& x, const Tensor2& y) const;

  // structure maps
  Tensor2 delta(const Mono& m) const;
  Tensor2 delta(const Poly& p) const;
  Laurent eps(const Mono& m) const;
  Laurent eps(const Poly& p) const;
  Poly antipode(const Mono& m) const;
  Poly antipode_inverse(const Mono& m) const;
  Poly circ(const Mono& m) const;

  /// Apply an operator linearly.
  Poly apply(const Op& op, const Poly& p) const;
  Op antipode_op() const;
  Op antipode_inverse_op() const;
  Op circ_op() const;
  Op compose(Op f, Op g) const;  // f after g

  /// Multiplicative operator scaling each generator: g -> lambda_g g.
  Op diagonal(const Laurent& la, const Laurent& lh, const Laurent& lc, const Laurent& ld) const;
  /// Antimultiplicative operator g -> lambda_g g' with a <-> h swapped and c, d fixed.
  Op anti_swap(const Laurent& la, const Laurent& lh, const Laurent& lc, const Laurent& ld) const;

  // functionals
  /// Multiplicative functional vanishing on c and d.
  Functional character(const Laurent& on_a, const Laurent& on_h) const;
  Functional theta() const;
  Functional beta() const;
  /// (f * g)(x) = sum f(x_1) g(x_2).
  Functional convolve(const Functional& f, const Functional& g) const;
  /// x -> f(S x)
  Functional after_antipode(const Functional& f) const;
  Laurent evaluate(const Functional& f, const Poly& p) const;

  /// (f * id)(x) = sum f(x_1) x_2
  Poly conv_left(const Functional& f, const Poly& p) const;
  /// (id * g)(x) = sum x_1 g(x_2)
  Poly conv_right(const Poly& p, const Functional& g) const;
  /// x -> sum f(x_1) x_2 g(x_3)
  Op sandwich(const Functional& f, const Functional& g) const;

  /// Canonical words of degree <= d in increasing order.
  std::vector<Mono> basis(int d) const;

 private:
  int sign_;
  struct Memo;
  std::shared_ptr<Memo> memo_;

  Poly mul_gen(Gen g, const Mono& m) const;
};

struct VerifyResult {
  std::string identity;
  int degree = 0;
  bool passed = true;
  std::size_t checked = 0;  // number of (word, sub-identity) evaluations
  std::string witness;      // first failing canonical word and the failing sub-identity
};

/// Catalog: hopf-axioms, circ-hopf, s2-theta, splus, nakayama, psqrt, unitary,
/// deltaN, radford, beta. "all" is accepted by verify_all only.
const std::vector<std::string>& identity_names();
VerifyResult verify(const Engine& e, const std::string& name, int degree);
std::vector<VerifyResult> verify_all(const Engine& e, int degree);

/// Local confluence: for every word of length <= max_len, all one-step reducts
/// normalize to the same polynomial.
VerifyResult check_confluence(const Engine& e, int max_len);
/// Random words: every rule application strictly decreases the measure and
/// normalization terminates.
VerifyResult check_termination(const Engine& e, std::size_t words, int max_len, unsigned seed);

}  // namespace cqg::sumu
