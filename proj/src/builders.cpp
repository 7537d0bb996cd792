#include "cqg/builders.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace cqg {

std::size_t GroupTable::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (mul[g][h] == 0) return h;
  throw std::logic_error("group element without inverse");
}

namespace {

// Closure of generators under multiplication, identity first, then in
// breadth-first order of discovery.
template <class T>
GroupTable close(std::string name, const T& identity, const std::vector<T>& gens, std::function<T(const T&, const T&)> mul,
                 std::function<std::string(const T&)> show) {
  std::vector<T> elems{identity};
  std::map<T, std::size_t> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      T x = mul(elems[i], g);
      if (!index.count(x)) {
        index[x] = elems.size();
        elems.push_back(x);
      }
    }
  }
  GroupTable t;
  t.name = std::move(name);
  for (const auto& e : elems) t.elements.push_back(show(e));
  t.mul.assign(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t.mul[a][b] = index.at(mul(elems[a], elems[b]));
  return t;
}

using Perm = std::vector<int>;

Perm perm_mul(const Perm& a, const Perm& b) {  // (ab)(x) = a(b(x))
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

std::string show_perm(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i] + 1);
  return s + "]";
}

}  // namespace

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n must be positive");
  GroupTable t;
  t.name = "Z" + std::to_string(n);
  t.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    t.elements.push_back(a == 0 ? "e" : "g" + (a == 1 ? std::string() : "^" + std::to_string(a)));
    for (std::size_t b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
  }
  return t;
}

GroupTable symmetric_group3() {
  return close<Perm>("S3", {0, 1, 2}, {{1, 0, 2}, {0, 2, 1}}, perm_mul, show_perm);
}

GroupTable dihedral_group4() {
  // rotation and reflection of the square's vertices
  return close<Perm>("D4", {0, 1, 2, 3}, {{1, 2, 3, 0}, {0, 3, 2, 1}}, perm_mul, show_perm);
}

GroupTable quaternion_group() {
  // (sign, unit) with unit 0..3 = 1, i, j, k
  using Q = std::array<int, 2>;
  static const int table[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                     {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                     {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                     {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
  auto mul = [](const Q& a, const Q& b) {
    const int* r = table[a[1]][b[1]];
    return Q{a[0] * b[0] * r[0], r[1]};
  };
  auto show = [](const Q& q) { return std::string(q[0] < 0 ? "-" : "") + "1ijk"[q[1]]; };
  return close<Q>("Q8", {1, 0}, {{1, 1}, {1, 2}}, mul, show);
}

std::vector<GroupTable> shipped_groups() {
  return {cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group3(), dihedral_group4(), quaternion_group()};
}

namespace {
Scalar one() { return Scalar::gauss(1); }
}  // namespace

HopfData group_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  HopfData h;
  auto& c = h.coalgebra;
  c.backend = Backend::GaussQ;
  c.basis = g.elements;
  c.delta.resize(n);
  c.circ = Matrix::identity(n, Backend::GaussQ);
  h.mult.assign(n, std::vector<std::vector<MultTerm>>(n));
  h.unit = Matrix(n, 1, Backend::GaussQ);
  h.unit(0, 0) = one();
  h.antipode = Matrix(n, n, Backend::GaussQ);
  for (std::size_t a = 0; a < n; ++a) {
    c.delta[a] = {{a, a, one()}};
    c.eps.push_back(one());
    h.antipode(g.inverse(a), a) = one();
    for (std::size_t b = 0; b < n; ++b) h.mult[a][b] = {{g.mul[a][b], one()}};
  }
  return h;
}

HopfData function_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  HopfData h;
  auto& c = h.coalgebra;
  c.backend = Backend::GaussQ;
  for (const auto& e : g.elements) c.basis.push_back("d" + e);
  c.delta.resize(n);
  Matrix circ(n, n, Backend::GaussQ);
  h.mult.assign(n, std::vector<std::vector<MultTerm>>(n));
  h.unit = Matrix(n, 1, Backend::GaussQ);
  h.antipode = Matrix(n, n, Backend::GaussQ);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) c.delta[a].push_back({x, g.mul[g.inverse(x)][a], one()});
    c.eps.push_back(Scalar::gauss(a == 0 ? 1 : 0));
    circ(g.inverse(a), a) = one();
    h.antipode(g.inverse(a), a) = one();
    h.unit(a, 0) = one();
    h.mult[a][a] = {{a, one()}};
  }
  c.circ = circ;
  return h;
}

HopfData sweedler_h4() {
  // basis 1, g, x, gx
  HopfData h;
  auto& c = h.coalgebra;
  c.backend = Backend::GaussQ;
  c.basis = {"1", "g", "x", "gx"};
  auto s = [](long v) { return Scalar::gauss(v); };
  // Delta x = x (x) 1 + g (x) x, Delta gx = gx (x) g + 1 (x) gx
  c.delta = {{{0, 0, s(1)}}, {{1, 1, s(1)}}, {{2, 0, s(1)}, {1, 2, s(1)}}, {{3, 1, s(1)}, {0, 3, s(1)}}};
  c.eps = {s(1), s(1), s(0), s(0)};
  Matrix circ(4, 4, Backend::GaussQ);
  circ(0, 0) = s(1);
  circ(1, 1) = s(1);
  circ(3, 2) = s(1);  // x° = gx
  circ(2, 3) = s(1);  // (gx)° = g gx = x
  c.circ = circ;
  h.mult.assign(4, std::vector<std::vector<MultTerm>>(4));
  // words as (power of g, has x) with the normal form g^a x^b
  auto idx = [](int a, int b) { return static_cast<std::size_t>(a + 2 * b); };
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          if (b1 && b2) continue;  // x^2 = 0
          // g^a1 x^b1 g^a2 x^b2 = (-1)^{b1 a2} g^{a1+a2} x^{b1+b2}
          long sign = (b1 && a2) ? -1 : 1;
          h.mult[idx(a1, b1)][idx(a2, b2)] = {{idx((a1 + a2) % 2, b1 + b2), s(sign)}};
        }
  h.unit = Matrix(4, 1, Backend::GaussQ);
  h.unit(0, 0) = s(1);
  h.antipode = Matrix(4, 4, Backend::GaussQ);
  h.antipode(0, 0) = s(1);
  h.antipode(1, 1) = s(1);
  h.antipode(3, 2) = s(-1);  // S(x) = -gx
  h.antipode(2, 3) = s(1);   // S(gx) = x
  return h;
}

}  // namespace cqg
