#include "cqg/sumu.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cqg::sumu {

namespace {

Mono canon(bool hat, int k, int m, int n) { return Mono{hat && k > 0, k, m, n}; }

void add_to(Poly& p, const Mono& m, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

template <class Map, class Key>
void add_to_map(Map& t, const Key& key, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

int rank_of(Gen g) { return g == Gen::C ? 1 : g == Gen::D ? 2 : 0; }

// The monomial obtained by removing the first letter of a canonical word.
Mono tail(const Mono& m) {
  if (m.k > 0) return canon(m.hat, m.k - 1, m.m, m.n);
  if (m.m > 0) return canon(false, 0, m.m - 1, m.n);
  return canon(false, 0, 0, m.n - 1);
}

Gen head(const Mono& m) {
  if (m.k > 0) return m.hat ? Gen::H : Gen::A;
  return m.m > 0 ? Gen::C : Gen::D;
}

}  // namespace

Word Mono::word() const {
  Word w;
  w.insert(w.end(), static_cast<std::size_t>(k), hat ? Gen::H : Gen::A);
  w.insert(w.end(), static_cast<std::size_t>(m), Gen::C);
  w.insert(w.end(), static_cast<std::size_t>(n), Gen::D);
  return w;
}

std::string to_string(Gen g) {
  switch (g) {
    case Gen::A: return "alpha";
    case Gen::H: return "alphahat";
    case Gen::C: return "gamma";
    case Gen::D: return "gamma°";
  }
  return "?";
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += " ";
    s += to_string(w[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string to_string(const Mono& m) { return to_string(m.word()); }

std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : p) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    if (m.degree() > 0) s += " " + to_string(m);
  }
  return s;
}

Poly monomial(const Mono& m, Laurent c) {
  Poly p;
  add_to(p, m, c);
  return p;
}

Poly operator+(Poly a, const Poly& b) {
  for (const auto& [m, c] : b) add_to(a, m, c);
  return a;
}

Poly operator-(Poly a, const Poly& b) {
  for (const auto& [m, c] : b) add_to(a, m, -c);
  return a;
}

Poly scale(const Laurent& c, Poly p) {
  if (c.is_zero()) return {};
  for (auto& [m, v] : p) v *= c;
  return p;
}

struct Engine::Memo {
  std::map<std::pair<Gen, Mono>, Poly> gen;
  std::map<Mono, Tensor2> delta;
  std::map<Mono, Poly> antipode, antipode_inv, circ;
};

Engine::Engine(int sign) : sign_(sign), memo_(std::make_shared<Memo>()) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign of mu must be +1 or -1");
}

Laurent Engine::mu(int power) const {
  Rational c = (sign_ < 0 && power % 2 != 0) ? -1 : 1;
  return Laurent::monomial(2 * power, c);
}

bool Engine::is_canonical(const Word& w) const { return redexes(w).empty(); }

std::vector<std::size_t> Engine::redexes(const Word& w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!rewrite_at(w, i).empty()) out.push_back(i);
  return out;
}

std::vector<std::pair<Laurent, Word>> Engine::rewrite_at(const Word& w, std::size_t pos) const {
  if (pos + 1 >= w.size()) return {};
  Gen x = w[pos], y = w[pos + 1];
  auto with = [&](std::initializer_list<Gen> middle) {
    Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    r.insert(r.end(), middle);
    r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
    return r;
  };
  const Laurent one(1);
  if (x == Gen::H && y == Gen::A) return {{one, with({})}, {mu(1), with({Gen::D, Gen::C})}};
  if (x == Gen::A && y == Gen::H) return {{one, with({})}, {mu(3), with({Gen::C, Gen::D})}};
  if (x == Gen::D && y == Gen::C) return {{one, with({Gen::C, Gen::D})}};
  if (x == Gen::C && y == Gen::A) return {{mu(-1), with({Gen::A, Gen::C})}};
  if (x == Gen::D && y == Gen::A) return {{mu(-1), with({Gen::A, Gen::D})}};
  if (x == Gen::C && y == Gen::H) return {{mu(1), with({Gen::H, Gen::C})}};
  if (x == Gen::D && y == Gen::H) return {{mu(1), with({Gen::H, Gen::D})}};
  return {};
}

std::pair<int, int> Engine::measure(const Word& w) {
  int ah = 0, inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (rank_of(w[i]) == 0) ++ah;
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (rank_of(w[i]) > rank_of(w[j])) ++inv;
  }
  return {ah, inv};
}

Poly Engine::mul_gen(Gen g, const Mono& m) const {
  auto key = std::make_pair(g, m);
  auto it = memo_->gen.find(key);
  if (it != memo_->gen.end()) return it->second;
  Word w{g};
  Word mw = m.word();
  w.insert(w.end(), mw.begin(), mw.end());
  Poly out;
  if (is_canonical(w)) {
    bool hat = g == Gen::H || (m.hat && g != Gen::A);
    if (g == Gen::A || g == Gen::H) out = monomial(canon(hat, m.k + 1, m.m, m.n));
    else if (g == Gen::C) out = monomial(canon(false, 0, m.m + 1, m.n));
    else out = monomial(canon(false, 0, 0, m.n + 1));
  } else {
    // only the first pair can be a redex; the reducts are prefix letters times tail(m)
    Mono rest = tail(m);
    for (const auto& [c, r] : rewrite_at(w, 0)) {
      std::size_t plen = r.size() - static_cast<std::size_t>(rest.degree());
      Poly p = monomial(rest, c);
      for (std::size_t i = plen; i-- > 0;) {
        Poly q;
        for (const auto& [mm, cc] : p)
          for (const auto& [m2, c2] : mul_gen(r[i], mm)) add_to(q, m2, cc * c2);
        p = std::move(q);
      }
      out = out + p;
    }
  }
  memo_->gen.emplace(key, out);
  return out;
}

Poly Engine::normalize(const Word& w) const {
  Poly p = monomial(Mono{});
  for (std::size_t i = w.size(); i-- > 0;) {
    Poly q;
    for (const auto& [m, c] : p)
      for (const auto& [m2, c2] : mul_gen(w[i], m)) add_to(q, m2, c * c2);
    p = std::move(q);
  }
  return p;
}

Poly Engine::mul(const Poly& x, const Poly& y) const {
  Poly out;
  for (const auto& [mx, cx] : x) {
    Poly p = y;
    Word w = mx.word();
    for (std::size_t i = w.size(); i-- > 0;) {
      Poly q;
      for (const auto& [m, c] : p)
        for (const auto& [m2, c2] : mul_gen(w[i], m)) add_to(q, m2, c * c2);
      p = std::move(q);
    }
    for (const auto& [m, c] : p) add_to(out, m, cx * c);
  }
  return out;
}

Tensor2 Engine::tensor_mul(const Tensor2& x, const Tensor2& y) const {
  Tensor2 out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      Poly l = mul(monomial(kx.first), monomial(ky.first));
      Poly r = mul(monomial(kx.second), monomial(ky.second));
      Laurent c = cx * cy;
      for (const auto& [ml, cl] : l)
        for (const auto& [mr, cr] : r) add_to_map(out, std::make_pair(ml, mr), c * cl * cr);
    }
  return out;
}

Tensor2 Engine::delta(const Mono& m) const {
  auto it = memo_->delta.find(m);
  if (it != memo_->delta.end()) return it->second;
  Tensor2 out;
  const Mono one{}, a = canon(false, 1, 0, 0), h = canon(true, 1, 0, 0), c = canon(false, 0, 1, 0),
             d = canon(false, 0, 0, 1);
  if (m.degree() == 0) {
    out[{one, one}] = Laurent(1);
  } else {
    Tensor2 g;
    switch (head(m)) {
      case Gen::A: g = {{{a, a}, Laurent(1)}, {{d, c}, mu(2)}}; break;
      case Gen::H: g = {{{h, h}, Laurent(1)}, {{c, d}, mu(2)}}; break;
      case Gen::C: g = {{{c, a}, Laurent(1)}, {{h, c}, Laurent(1)}}; break;
      case Gen::D: g = {{{a, d}, Laurent(1)}, {{d, h}, Laurent(1)}}; break;
    }
    out = tensor_mul(g, delta(tail(m)));
  }
  memo_->delta.emplace(m, out);
  return out;
}

Tensor2 Engine::delta(const Poly& p) const {
  Tensor2 out;
  for (const auto& [m, c] : p)
    for (const auto& [k, v] : delta(m)) add_to_map(out, k, c * v);
  return out;
}

Laurent Engine::eps(const Mono& m) const { return m.m == 0 && m.n == 0 ? Laurent(1) : Laurent(); }

Laurent Engine::eps(const Poly& p) const {
  Laurent out;
  for (const auto& [m, c] : p) out += c * eps(m);
  return out;
}

namespace {
// Image of a word under a letter map, optionally reversed.
Poly map_word(const Engine& e, const Mono& m, bool reverse, const std::function<std::pair<Laurent, Gen>(Gen)>& f) {
  Word w = m.word();
  if (reverse) std::reverse(w.begin(), w.end());
  Laurent c(1);
  for (auto& g : w) {
    auto [x, h] = f(g);
    c *= x;
    g = h;
  }
  return scale(c, e.normalize(w));
}
}  // namespace

Poly Engine::antipode(const Mono& m) const {
  auto it = memo_->antipode.find(m);
  if (it != memo_->antipode.end()) return it->second;
  Poly out = map_word(*this, m, true, [this](Gen g) -> std::pair<Laurent, Gen> {
    switch (g) {
      case Gen::A: return {Laurent(1), Gen::H};
      case Gen::H: return {Laurent(1), Gen::A};
      case Gen::C: return {-mu(1), Gen::C};
      case Gen::D: return {-mu(-1), Gen::D};
    }
    return {};
  });
  memo_->antipode.emplace(m, out);
  return out;
}

Poly Engine::antipode_inverse(const Mono& m) const {
  auto it = memo_->antipode_inv.find(m);
  if (it != memo_->antipode_inv.end()) return it->second;
  Poly out = map_word(*this, m, true, [this](Gen g) -> std::pair<Laurent, Gen> {
    switch (g) {
      case Gen::A: return {Laurent(1), Gen::H};
      case Gen::H: return {Laurent(1), Gen::A};
      case Gen::C: return {-mu(-1), Gen::C};
      case Gen::D: return {-mu(1), Gen::D};
    }
    return {};
  });
  memo_->antipode_inv.emplace(m, out);
  return out;
}

Poly Engine::circ(const Mono& m) const {
  auto it = memo_->circ.find(m);
  if (it != memo_->circ.end()) return it->second;
  // coefficients are real, so conjugation only swaps the letters
  Poly out = map_word(*this, m, false, [](Gen g) -> std::pair<Laurent, Gen> {
    if (g == Gen::C) return {Laurent(1), Gen::D};
    if (g == Gen::D) return {Laurent(1), Gen::C};
    return {Laurent(1), g};
  });
  memo_->circ.emplace(m, out);
  return out;
}

Poly Engine::apply(const Op& op, const Poly& p) const {
  Poly out;
  for (const auto& [m, c] : p)
    for (const auto& [m2, c2] : op(m)) add_to(out, m2, c * c2);
  return out;
}

Op Engine::antipode_op() const {
  return [this](const Mono& m) { return antipode(m); };
}
Op Engine::antipode_inverse_op() const {
  return [this](const Mono& m) { return antipode_inverse(m); };
}
Op Engine::circ_op() const {
  return [this](const Mono& m) { return circ(m); };
}

Op Engine::compose(Op f, Op g) const {
  return [this, f = std::move(f), g = std::move(g)](const Mono& m) { return apply(f, g(m)); };
}

Op Engine::diagonal(const Laurent& la, const Laurent& lh, const Laurent& lc, const Laurent& ld) const {
  return [=](const Mono& m) { return monomial(m, pow(m.hat ? lh : la, m.k) * pow(lc, m.m) * pow(ld, m.n)); };
}

Op Engine::anti_swap(const Laurent& la, const Laurent& lh, const Laurent& lc, const Laurent& ld) const {
  return [=, this](const Mono& m) {
    return map_word(*this, m, true, [&](Gen g) -> std::pair<Laurent, Gen> {
      switch (g) {
        case Gen::A: return {la, Gen::H};
        case Gen::H: return {lh, Gen::A};
        case Gen::C: return {lc, Gen::C};
        case Gen::D: return {ld, Gen::D};
      }
      return {};
    });
  };
}

Functional Engine::character(const Laurent& on_a, const Laurent& on_h) const {
  return [=](const Mono& m) {
    if (m.m > 0 || m.n > 0) return Laurent();
    return pow(m.hat ? on_h : on_a, m.k);
  };
}

Functional Engine::theta() const { return character(s(-2), s(2)); }
Functional Engine::beta() const { return character(s(-1), s(1)); }

Functional Engine::convolve(const Functional& f, const Functional& g) const {
  auto cache = std::make_shared<std::map<Mono, Laurent>>();
  return [this, f, g, cache](const Mono& m) {
    auto it = cache->find(m);
    if (it != cache->end()) return it->second;
    Laurent v;
    for (const auto& [k, c] : delta(m)) {
      Laurent x = f(k.first);
      if (x.is_zero()) continue;
      v += c * x * g(k.second);
    }
    cache->emplace(m, v);
    return v;
  };
}

Functional Engine::after_antipode(const Functional& f) const {
  return [this, f](const Mono& m) { return evaluate(f, antipode(m)); };
}

Laurent Engine::evaluate(const Functional& f, const Poly& p) const {
  Laurent v;
  for (const auto& [m, c] : p) v += c * f(m);
  return v;
}

Poly Engine::conv_left(const Functional& f, const Poly& p) const {
  Poly out;
  for (const auto& [m, c] : p)
    for (const auto& [k, v] : delta(m)) {
      Laurent x = f(k.first);
      if (!x.is_zero()) add_to(out, k.second, c * v * x);
    }
  return out;
}

Poly Engine::conv_right(const Poly& p, const Functional& g) const {
  Poly out;
  for (const auto& [m, c] : p)
    for (const auto& [k, v] : delta(m)) {
      Laurent x = g(k.second);
      if (!x.is_zero()) add_to(out, k.first, c * v * x);
    }
  return out;
}

Op Engine::sandwich(const Functional& f, const Functional& g) const {
  return [this, f, g](const Mono& m) { return conv_left(f, conv_right(monomial(m), g)); };
}

std::vector<Mono> Engine::basis(int d) const {
  std::vector<Mono> out;
  for (int k = 0; k <= d; ++k)
    for (int m = 0; k + m <= d; ++m)
      for (int n = 0; k + m + n <= d; ++n) {
        out.push_back(canon(false, k, m, n));
        if (k > 0) out.push_back(canon(true, k, m, n));
      }
  std::sort(out.begin(), out.end(), [](const Mono& x, const Mono& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x < y;
  });
  return out;
}

// ---------------------------------------------------------------- verification

namespace {

using Check = std::pair<std::string, std::function<bool(const Mono&)>>;

VerifyResult sweep(const Engine& e, const std::string& name, int degree, const std::vector<Check>& checks) {
  VerifyResult r{name, degree, true, 0, ""};
  for (const auto& m : e.basis(degree))
    for (const auto& [label, f] : checks) {
      ++r.checked;
      if (!f(m)) {
        r.passed = false;
        r.witness = to_string(m) + ": " + label;
        return r;
      }
    }
  return r;
}

Tensor3 left_leg(const Engine& e, const Tensor2& t) {  // (Delta (x) id)
  Tensor3 out;
  for (const auto& [k, c] : t)
    for (const auto& [k2, c2] : e.delta(k.first)) add_to_map(out, std::make_tuple(k2.first, k2.second, k.second), c * c2);
  return out;
}

Tensor3 right_leg(const Engine& e, const Tensor2& t) {  // (id (x) Delta)
  Tensor3 out;
  for (const auto& [k, c] : t)
    for (const auto& [k2, c2] : e.delta(k.second)) add_to_map(out, std::make_tuple(k.first, k2.first, k2.second), c * c2);
  return out;
}

Poly gen(Gen g) {
  switch (g) {
    case Gen::A: return monomial(Mono{false, 1, 0, 0});
    case Gen::H: return monomial(Mono{true, 1, 0, 0});
    case Gen::C: return monomial(Mono{false, 0, 1, 0});
    case Gen::D: return monomial(Mono{false, 0, 0, 1});
  }
  return {};
}

const Gen kGens[] = {Gen::A, Gen::H, Gen::C, Gen::D};

// Operators of the antipode calculus, assembled from beta.
struct Calculus {
  const Engine& e;
  Functional beta, beta_inv, beta2, alpha, alpha_inv;
  Op s, s_inv, s2, s_minus2, splus, splus_inv, n, p, p_inv, u;

  explicit Calculus(const Engine& en) : e(en) {
    beta = e.beta();
    beta_inv = e.after_antipode(beta);
    beta2 = e.convolve(beta, beta);
    alpha = e.convolve(beta2, beta2);
    alpha_inv = e.after_antipode(alpha);
    s = e.antipode_op();
    s_inv = e.antipode_inverse_op();
    s2 = e.compose(s, s);
    s_minus2 = e.compose(s_inv, s_inv);
    splus = e.sandwich(beta, beta_inv);
    splus_inv = e.sandwich(beta_inv, beta);
    n = e.sandwich(beta2, beta2);
    p = e.sandwich(beta, beta);
    p_inv = e.sandwich(beta_inv, beta_inv);
    u = e.compose(s, e.compose(splus_inv, p_inv));
  }
};

Poly at(const Op& f, const Mono& m) { return f(m); }

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"hopf-axioms", "circ-hopf", "s2-theta", "splus",  "nakayama",
                                              "psqrt",       "unitary",   "deltaN",   "radford", "beta"};
  return names;
}

VerifyResult verify(const Engine& e, const std::string& name, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  const Laurent one(1);
  auto x_of = [](const Mono& m) { return monomial(m); };
  std::vector<Check> checks;

  if (name == "hopf-axioms") {
    checks.push_back({"coassociativity", [&](const Mono& m) {
                        Tensor2 d = e.delta(m);
                        return left_leg(e, d) == right_leg(e, d);
                      }});
    checks.push_back({"counit", [&](const Mono& m) {
                        Poly l, r;
                        for (const auto& [k, c] : e.delta(m)) {
                          l = l + monomial(k.second, c * e.eps(k.first));
                          r = r + monomial(k.first, c * e.eps(k.second));
                        }
                        return l == x_of(m) && r == x_of(m);
                      }});
    checks.push_back({"antipode", [&](const Mono& m) {
                        Poly l, r;
                        for (const auto& [k, c] : e.delta(m)) {
                          l = l + scale(c, e.mul(e.antipode(k.first), monomial(k.second)));
                          r = r + scale(c, e.mul(monomial(k.first), e.antipode(k.second)));
                        }
                        Poly expect = monomial(Mono{}, e.eps(m));
                        return l == expect && r == expect;
                      }});
    checks.push_back({"delta multiplicative", [&](const Mono& m) {
                        for (Gen g : kGens) {
                          Tensor2 dg = e.delta(gen(g)), dm = e.delta(m);
                          if (e.delta(e.mul(gen(g), x_of(m))) != e.tensor_mul(dg, dm)) return false;
                          if (e.delta(e.mul(x_of(m), gen(g))) != e.tensor_mul(dm, dg)) return false;
                        }
                        return true;
                      }});
    checks.push_back({"eps multiplicative", [&](const Mono& m) {
                        for (Gen g : kGens) {
                          Laurent v = e.eps(gen(g)) * e.eps(m);
                          if (e.eps(e.mul(gen(g), x_of(m))) != v || e.eps(e.mul(x_of(m), gen(g))) != v) return false;
                        }
                        return true;
                      }});
    checks.push_back({"antipode antimultiplicative", [&](const Mono& m) {
                        Op s = e.antipode_op();
                        for (Gen g : kGens) {
                          Poly sg = e.apply(s, gen(g)), sm = e.antipode(m);
                          if (e.apply(s, e.mul(gen(g), x_of(m))) != e.mul(sm, sg)) return false;
                          if (e.apply(s, e.mul(x_of(m), gen(g))) != e.mul(sg, sm)) return false;
                        }
                        return true;
                      }});
    checks.push_back({"S^-1 S = id", [&](const Mono& m) {
                        return e.apply(e.antipode_inverse_op(), e.antipode(m)) == x_of(m);
                      }});
  } else if (name == "circ-hopf") {
    Op c = e.circ_op(), s = e.antipode_op();
    checks.push_back({"(xy)° = x°y°", [&, c](const Mono& m) {
                        for (Gen g : kGens) {
                          Poly cg = e.apply(c, gen(g)), cm = e.circ(m);
                          if (e.apply(c, e.mul(gen(g), x_of(m))) != e.mul(cg, cm)) return false;
                          if (e.apply(c, e.mul(x_of(m), gen(g))) != e.mul(cm, cg)) return false;
                        }
                        return true;
                      }});
    checks.push_back({"x°° = x", [&, c](const Mono& m) { return e.apply(c, e.circ(m)) == x_of(m); }});
    checks.push_back({"Delta(x°) = sum x_2° (x) x_1°", [&](const Mono& m) {
                        Tensor2 r;
                        for (const auto& [k, v] : e.delta(m))
                          for (const auto& [a, ca] : e.circ(k.second))
                            for (const auto& [b, cb] : e.circ(k.first)) add_to_map(r, std::make_pair(a, b), v * ca * cb);
                        return e.delta(e.circ(m)) == r;
                      }});
    checks.push_back({"eps(x°) = conj eps(x)", [&](const Mono& m) { return e.eps(e.circ(m)) == e.eps(m); }});
    checks.push_back({"S ° S ° = id", [&, c, s](const Mono& m) {
                        return e.apply(s, e.apply(c, e.apply(s, e.circ(m)))) == x_of(m);
                      }});
  } else if (name == "s2-theta") {
    Op s = e.antipode_op();
    Functional th = e.theta(), ths = e.after_antipode(th);
    Op rhs = e.sandwich(th, ths);
    checks.push_back({"S^2 = theta * id * theta S", [&, s, rhs](const Mono& m) { return e.apply(s, e.antipode(m)) == rhs(m); }});
    checks.push_back({"theta multiplicative", [&, th](const Mono& m) {
                        for (Gen g : kGens)
                          if (e.evaluate(th, e.mul(gen(g), x_of(m))) != e.evaluate(th, gen(g)) * th(m)) return false;
                        return true;
                      }});
  } else {
    auto calc = std::make_shared<Calculus>(e);
    if (name == "splus") {
      Op expect = e.diagonal(one, one, e.s(2), e.s(-2));
      checks.push_back({"S+ = beta * id * beta^-1 matches generator values", [&, calc, expect](const Mono& m) {
                          return at(calc->splus, m) == expect(m);
                        }});
      checks.push_back({"S+^2 = S^2", [&, calc](const Mono& m) {
                          return e.apply(calc->splus, calc->splus(m)) == calc->s2(m);
                        }});
      checks.push_back({"S+ S+^-1 = id", [&, calc](const Mono& m) { return e.apply(calc->splus, calc->splus_inv(m)) == x_of(m); }});
    } else if (name == "nakayama") {
      Op expect = e.diagonal(e.mu(-2), e.mu(2), one, one);
      checks.push_back({"N = beta^2 * id * beta^2 matches generator values", [&, calc, expect](const Mono& m) {
                          return calc->n(m) == expect(m);
                        }});
      checks.push_back({"alpha = eps N", [&, calc](const Mono& m) { return calc->alpha(m) == e.eps(calc->n(m)); }});
    } else if (name == "psqrt") {
      Op expect = e.diagonal(e.s(-2), e.s(2), one, one);
      checks.push_back({"P = beta * id * beta matches generator values", [&, calc, expect](const Mono& m) {
                          return calc->p(m) == expect(m);
                        }});
      checks.push_back({"P^2 = N", [&, calc](const Mono& m) { return e.apply(calc->p, calc->p(m)) == calc->n(m); }});
      checks.push_back({"P S+ = S+ P", [&, calc](const Mono& m) {
                          return e.apply(calc->p, calc->splus(m)) == e.apply(calc->splus, calc->p(m));
                        }});
    } else if (name == "unitary") {
      Laurent sg = Laurent(-e.sign());
      Op expect = e.anti_swap(e.s(2), e.s(-2), sg, sg);
      checks.push_back({"U = S S+^-1 P^-1 matches generator values", [&, calc, expect](const Mono& m) {
                          return calc->u(m) == expect(m);
                        }});
      checks.push_back({"U^2 = id", [&, calc](const Mono& m) { return e.apply(calc->u, calc->u(m)) == x_of(m); }});
      checks.push_back({"U antimultiplicative", [&, calc](const Mono& m) {
                          for (Gen g : kGens) {
                            Poly ug = e.apply(calc->u, gen(g)), um = calc->u(m);
                            if (e.apply(calc->u, e.mul(gen(g), x_of(m))) != e.mul(um, ug)) return false;
                            if (e.apply(calc->u, e.mul(x_of(m), gen(g))) != e.mul(ug, um)) return false;
                          }
                          return true;
                        }});
    } else if (name == "deltaN") {
      checks.push_back({"Delta N = (N (x) S^-2) Delta", [&, calc](const Mono& m) {
                          Tensor2 r;
                          for (const auto& [k, v] : e.delta(m))
                            for (const auto& [a, ca] : calc->n(k.first))
                              for (const auto& [b, cb] : calc->s_minus2(k.second)) add_to_map(r, std::make_pair(a, b), v * ca * cb);
                          return e.delta(calc->n(m)) == r;
                        }});
    } else if (name == "radford") {
      checks.push_back({"S^4 = (alpha * id)(id * alpha^-1), alpha = beta^4", [&, calc](const Mono& m) {
                          Poly s4 = e.apply(calc->s2, calc->s2(m));
                          return s4 == e.conv_left(calc->alpha, e.conv_right(x_of(m), calc->alpha_inv));
                        }});
      checks.push_back({"N = alpha * S^-2", [&, calc](const Mono& m) {
                          return calc->n(m) == e.apply(calc->s_minus2, e.conv_left(calc->alpha, x_of(m)));
                        }});
      checks.push_back({"N^-1 = alpha^-1 * S^2", [&, calc](const Mono& m) {
                          Poly ninv = e.apply(calc->s2, e.conv_left(calc->alpha_inv, x_of(m)));
                          return e.apply(calc->n, ninv) == x_of(m);
                        }});
      checks.push_back({"alpha^-1 = alpha S", [&, calc](const Mono& m) {
                          return e.convolve(calc->alpha, calc->alpha_inv)(m) == e.eps(m);
                        }});
    } else if (name == "beta") {
      checks.push_back({"beta^-1 = beta S", [&, calc](const Mono& m) {
                          return e.convolve(calc->beta, calc->beta_inv)(m) == e.eps(m) &&
                                 e.convolve(calc->beta_inv, calc->beta)(m) == e.eps(m);
                        }});
      checks.push_back({"beta multiplicative", [&, calc](const Mono& m) {
                          for (Gen g : kGens)
                            if (e.evaluate(calc->beta, e.mul(gen(g), x_of(m))) != e.evaluate(calc->beta, gen(g)) * calc->beta(m))
                              return false;
                          return true;
                        }});
      checks.push_back({"beta S+ = beta", [&, calc](const Mono& m) { return e.evaluate(calc->beta, calc->splus(m)) == calc->beta(m); }});
      checks.push_back({"S+ = (beta * id)(id * beta^-1) commuting factors", [&, calc](const Mono& m) {
                          Poly x = x_of(m);
                          return e.conv_left(calc->beta, e.conv_right(x, calc->beta_inv)) ==
                                 e.conv_right(e.conv_left(calc->beta, x), calc->beta_inv);
                        }});
    } else {
      throw std::invalid_argument("unknown identity: " + name);
    }
    return sweep(e, name, degree, checks);
  }
  return sweep(e, name, degree, checks);
}

std::vector<VerifyResult> verify_all(const Engine& e, int degree) {
  std::vector<VerifyResult> out;
  for (const auto& n : identity_names()) out.push_back(verify(e, n, degree));
  return out;
}

VerifyResult check_confluence(const Engine& e, int max_len) {
  VerifyResult r{"confluence", max_len, true, 0, ""};
  Word w;
  std::function<bool()> rec = [&]() -> bool {
    auto red = e.redexes(w);
    if (!red.empty()) {
      Poly ref = e.normalize(w);
      for (auto pos : red) {
        ++r.checked;
        Poly got;
        for (const auto& [c, w2] : e.rewrite_at(w, pos)) got = got + scale(c, e.normalize(w2));
        if (got != ref) {
          r.passed = false;
          r.witness = to_string(w) + " at position " + std::to_string(pos);
          return false;
        }
      }
    }
    if (static_cast<int>(w.size()) == max_len) return true;
    for (Gen g : kGens) {
      w.push_back(g);
      bool ok = rec();
      w.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  rec();
  return r;
}

VerifyResult check_termination(const Engine& e, std::size_t words, int max_len, unsigned seed) {
  VerifyResult r{"termination", max_len, true, 0, ""};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
  const std::size_t budget = 1000000;
  for (std::size_t t = 0; t < words; ++t) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) g = kGens[letter(rng)];
    // leftmost rewriting, independent of the memoized strategy in normalize
    std::map<Word, Laurent> pending{{w, Laurent(1)}};
    Poly result;
    std::size_t steps = 0;
    while (!pending.empty()) {
      auto it = pending.begin();
      Word cur = it->first;
      Laurent c = it->second;
      pending.erase(it);
      auto red = e.redexes(cur);
      if (red.empty()) {
        Poly p = e.normalize(cur);  // canonical word: a single monomial
        result = result + scale(c, p);
        continue;
      }
      if (++steps > budget) {
        r.passed = false;
        r.witness = to_string(w) + ": step budget exhausted";
        return r;
      }
      auto before = Engine::measure(cur);
      for (const auto& [c2, w2] : e.rewrite_at(cur, red.front())) {
        if (!(Engine::measure(w2) < before)) {
          r.passed = false;
          r.witness = to_string(cur) + ": measure does not decrease";
          return r;
        }
        add_to_map(pending, w2, c * c2);
      }
    }
    ++r.checked;
    if (result != e.normalize(w)) {
      r.passed = false;
      r.witness = to_string(w) + ": strategies disagree";
      return r;
    }
  }
  return r;
}

}  // namespace cqg::sumu
