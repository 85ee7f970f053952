#pragma once

// Sparse rational combinations of elementary matrices E_ij and their
// tensor powers, with the Z/2 sign rules of the super world.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

#include "superbd/rational.hpp"

namespace superbd {

/// Elementary matrix E_ij of the defining representation, 1-based.
struct BasisIndex {
  int i = 1;
  int j = 1;
  auto operator<=>(const BasisIndex&) const = default;
};

/// Z/2-grading of gl(m|n): line k is even iff k <= m.
struct Grading {
  int m = 1;
  int n = 1;

  [[nodiscard]] int size() const { return m + n; }
  [[nodiscard]] int line_parity(int k) const { return k > m ? 1 : 0; }
  [[nodiscard]] int parity(const BasisIndex& b) const { return (line_parity(b.i) + line_parity(b.j)) % 2; }
  [[nodiscard]] int sign(int p) const { return p % 2 == 0 ? 1 : -1; }
  bool operator==(const Grading&) const = default;
};

inline int parity_sign(int p) { return (p & 1) ? -1 : 1; }

/// Finite linear combination with exact coefficients; zero coefficients are
/// never stored, so structural equality is equality of vectors.
template <class Key>
class SparseCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  SparseCombination() = default;

  static SparseCombination unit(const Key& k, const Rational& c = 1) {
    SparseCombination s;
    s.add(k, c);
    return s;
  }

  void add(const Key& k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void set(const Key& k, const Rational& c) {
    if (sgn(c) == 0)
      terms_.erase(k);
    else
      terms_[k] = c;
  }

  [[nodiscard]] Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
  [[nodiscard]] const_iterator end() const { return terms_.end(); }
  [[nodiscard]] const map_type& terms() const { return terms_; }

  SparseCombination& operator+=(const SparseCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  SparseCombination& operator-=(const SparseCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  SparseCombination& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend SparseCombination operator+(SparseCombination a, const SparseCombination& b) { return a += b; }
  friend SparseCombination operator-(SparseCombination a, const SparseCombination& b) { return a -= b; }
  friend SparseCombination operator*(SparseCombination a, const Rational& c) { return a *= c; }
  friend SparseCombination operator*(const Rational& c, SparseCombination a) { return a *= c; }
  friend SparseCombination operator-(SparseCombination a) { return a *= Rational(-1); }
  friend bool operator==(const SparseCombination& a, const SparseCombination& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

using AlgebraElement = SparseCombination<BasisIndex>;
using Tensor2 = SparseCombination<std::array<BasisIndex, 2>>;
using Tensor3 = SparseCombination<std::array<BasisIndex, 3>>;

inline AlgebraElement E(int i, int j, const Rational& c = 1) { return AlgebraElement::unit({i, j}, c); }

inline Tensor2 tensor(const AlgebraElement& x, const AlgebraElement& y) {
  Tensor2 t;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) t.add({a, b}, ca * cb);
  return t;
}

inline Tensor3 tensor(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
  Tensor3 t;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [c, cc] : z) t.add({a, b, c}, ca * cb * cc);
  return t;
}

/// Splits an element into its even and odd parts.
inline std::pair<AlgebraElement, AlgebraElement> split_parity(const AlgebraElement& x, const Grading& g) {
  AlgebraElement even, odd;
  for (const auto& [b, c] : x) (g.parity(b) == 0 ? even : odd).add(b, c);
  return {even, odd};
}

/// Parity of a homogeneous element; throws on a non-homogeneous one. Zero is even.
inline int parity_of(const AlgebraElement& x, const Grading& g) {
  int p = -1;
  for (const auto& [b, c] : x) {
    const int q = g.parity(b);
    if (p >= 0 && p != q) throw std::invalid_argument("parity of a non-homogeneous element");
    p = q;
  }
  return p < 0 ? 0 : p;
}

/// Associative product in the defining representation.
inline AlgebraElement matrix_product(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      if (a.j == b.i) out.add({a.i, b.j}, ca * cb);
  return out;
}

/// [E_a, E_b] = E_a E_b - (-1)^{|a||b|} E_b E_a, extended bilinearly.
inline AlgebraElement supercommutator(const AlgebraElement& x, const AlgebraElement& y, const Grading& g) {
  AlgebraElement out;
  for (const auto& [a, ca] : x) {
    const int pa = g.parity(a);
    for (const auto& [b, cb] : y) {
      const Rational c = ca * cb;
      if (a.j == b.i) out.add({a.i, b.j}, c);
      if (b.j == a.i) out.add({b.i, a.j}, pa * g.parity(b) ? c : Rational(-c));
    }
  }
  return out;
}

/// Supertrace form str(xy).
inline Rational supertrace_form(const AlgebraElement& x, const AlgebraElement& y, const Grading& g) {
  Rational s = 0;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      if (a.j == b.i && a.i == b.j) s += g.line_parity(a.i) ? Rational(-ca * cb) : Rational(ca * cb);
  return s;
}

/// sum x (x) y  |->  sum (-1)^{|x||y|} y (x) x
inline Tensor2 graded_flip(const Tensor2& t, const Grading& g) {
  Tensor2 out;
  for (const auto& [k, c] : t) {
    const bool odd = g.parity(k[0]) * g.parity(k[1]);
    out.add({k[1], k[0]}, odd ? Rational(-c) : c);
  }
  return out;
}

enum class Legs { L12, L13, L23 };

/// A two-tensor placed in two of three tensor slots; the remaining slot holds
/// the unit, which is never materialized.
struct Embedded {
  Tensor2 tensor;
  Legs legs = Legs::L12;
};

inline Embedded embed(Tensor2 t, Legs legs) { return {std::move(t), legs}; }

/// Graded commutator of two embedded tensors, for the three slot pairings that
/// occur in the classical Yang-Baxter equation:
///   [a(x)b(x)1, c(x)1(x)d] = (-1)^{|b||c|} [a,c](x)b(x)d
///   [a(x)b(x)1, 1(x)c(x)d] = a(x)[b,c](x)d
///   [a(x)1(x)b, 1(x)c(x)d] = (-1)^{|b||c|} a(x)c(x)[b,d]
inline Tensor3 bracket(const Embedded& lhs, const Embedded& rhs, const Grading& g) {
  Tensor3 out;
  auto each = [&](auto&& emit) {
    for (const auto& [k1, c1] : lhs.tensor)
      for (const auto& [k2, c2] : rhs.tensor) emit(k1[0], k1[1], k2[0], k2[1], c1 * c2);
  };
  if (lhs.legs == Legs::L12 && rhs.legs == Legs::L13) {
    each([&](const BasisIndex& a, const BasisIndex& b, const BasisIndex& c, const BasisIndex& d, const Rational& k) {
      const Rational s = g.parity(b) * g.parity(c) ? Rational(-k) : k;
      for (const auto& [ac, cac] : supercommutator(E(a.i, a.j), E(c.i, c.j), g)) out.add({ac, b, d}, s * cac);
    });
  } else if (lhs.legs == Legs::L12 && rhs.legs == Legs::L23) {
    each([&](const BasisIndex& a, const BasisIndex& b, const BasisIndex& c, const BasisIndex& d, const Rational& k) {
      for (const auto& [bc, cbc] : supercommutator(E(b.i, b.j), E(c.i, c.j), g)) out.add({a, bc, d}, k * cbc);
    });
  } else if (lhs.legs == Legs::L13 && rhs.legs == Legs::L23) {
    each([&](const BasisIndex& a, const BasisIndex& b, const BasisIndex& c, const BasisIndex& d, const Rational& k) {
      const Rational s = g.parity(b) * g.parity(c) ? Rational(-k) : k;
      for (const auto& [bd, cbd] : supercommutator(E(b.i, b.j), E(d.i, d.j), g)) out.add({a, c, bd}, s * cbd);
    });
  } else {
    throw std::invalid_argument("bracket: unsupported pair of tensor slots");
  }
  return out;
}

}  // namespace superbd
