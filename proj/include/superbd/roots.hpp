#pragma once

// Roots of gl/sl(m|n) as integer weights in the epsilon/delta basis, simple
// root systems (Borels) given by an ordering of the m+n weight lines, odd
// reflections, normalized root vectors, coroots h_alpha and Omega_0.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "superbd/rational.hpp"
#include "superbd/superalgebra.hpp"
#include "superbd/tensor.hpp"

namespace superbd {

struct Root {
  std::vector<int> weight;
  int parity = 0;

  auto operator<=>(const Root& o) const { return weight <=> o.weight; }
  bool operator==(const Root& o) const { return weight == o.weight; }
};

inline Root make_root(std::vector<int> weight, const Grading& g) {
  if (weight.size() != static_cast<std::size_t>(g.size())) throw std::invalid_argument("root weight has wrong length");
  int p = 0;
  for (std::size_t k = 0; k < weight.size(); ++k) p += weight[k] * g.line_parity(static_cast<int>(k + 1));
  return {std::move(weight), ((p % 2) + 2) % 2};
}

/// epsilon_i - epsilon_j (lines 1-based).
inline Root line_root(int i, int j, const Grading& g) {
  std::vector<int> w(static_cast<std::size_t>(g.size()), 0);
  w[static_cast<std::size_t>(i - 1)] += 1;
  w[static_cast<std::size_t>(j - 1)] -= 1;
  return make_root(std::move(w), g);
}

inline Root operator-(const Root& a) {
  Root r = a;
  for (auto& x : r.weight) x = -x;
  return r;
}

inline Root add(const Root& a, const Root& b, const Grading& g) {
  std::vector<int> w(a.weight.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = a.weight[k] + b.weight[k];
  return make_root(std::move(w), g);
}

inline bool is_zero(const Root& a) {
  return std::all_of(a.weight.begin(), a.weight.end(), [](int x) { return x == 0; });
}

/// For an epsilon_i - epsilon_j root, the pair (i, j).
inline std::pair<int, int> root_lines(const Root& a) {
  int plus = 0, minus = 0;
  for (std::size_t k = 0; k < a.weight.size(); ++k) {
    const int w = a.weight[k];
    if (w == 1 && plus == 0)
      plus = static_cast<int>(k + 1);
    else if (w == -1 && minus == 0)
      minus = static_cast<int>(k + 1);
    else if (w != 0)
      throw std::invalid_argument("weight is not a root of gl(m|n)");
  }
  if (plus == 0 || minus == 0) throw std::invalid_argument("weight is not a root of gl(m|n)");
  return {plus, minus};
}

inline bool is_root(const Root& a) {
  try {
    root_lines(a);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

/// Bilinear form on weights induced by the supertrace form:
/// (eps_k, eps_l) = delta_kl (-1)^{[k]}.
inline Rational root_form(const Root& a, const Root& b, const Grading& g) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.weight.size(); ++k) {
    const int term = a.weight[k] * b.weight[k];
    s += g.line_parity(static_cast<int>(k + 1)) ? -term : term;
  }
  return s;
}

/// All roots epsilon_i - epsilon_j, i != j, sorted by weight.
inline std::vector<Root> all_roots(const Grading& g) {
  std::vector<Root> roots;
  for (int i = 1; i <= g.size(); ++i)
    for (int j = 1; j <= g.size(); ++j)
      if (i != j) roots.push_back(line_root(i, j, g));
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline std::string root_name(const Root& a, const Grading& g) {
  auto line = [&](int k) {
    return g.line_parity(k) ? "d" + std::to_string(k - g.m) : "e" + std::to_string(k);
  };
  try {
    auto [i, j] = root_lines(a);
    return line(i) + "-" + line(j);
  } catch (const std::invalid_argument&) {
    std::string s = "(";
    for (std::size_t k = 0; k < a.weight.size(); ++k) s += (k ? "," : "") + std::to_string(a.weight[k]);
    return s + ")";
  }
}

struct DynkinDiagram {
  Grading grading;
  std::vector<int> order;  // weight lines, 1-based
  int sign = 1;
  std::vector<Root> simple_roots;
  Matrix gram;

  [[nodiscard]] std::size_t rank() const { return simple_roots.size(); }

  /// Same Borel: equal sets of simple roots.
  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    if (!(a.grading == b.grading)) return false;
    std::set<Root> sa(a.simple_roots.begin(), a.simple_roots.end());
    std::set<Root> sb(b.simple_roots.begin(), b.simple_roots.end());
    return sa == sb;
  }
};

inline bool is_shuffle_word(const std::vector<int>& order, const Grading& g) {
  int last_even = 0, last_odd = 0;
  for (int k : order) {
    int& last = g.line_parity(k) ? last_odd : last_even;
    if (k < last) return false;
    last = k;
  }
  return true;
}

/// Simple roots sign * (eps_{order[k]} - eps_{order[k+1]}).
inline DynkinDiagram diagram_from_order(const Grading& g, std::vector<int> order, int sign) {
  if (order.size() != static_cast<std::size_t>(g.size())) throw std::invalid_argument("line order has wrong length");
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted[k] != static_cast<int>(k + 1)) throw std::invalid_argument("line order is not a permutation");
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("diagram sign must be +1 or -1");
  DynkinDiagram d{g, std::move(order), sign, {}, {}};
  for (std::size_t k = 0; k + 1 < d.order.size(); ++k) {
    Root r = line_root(d.order[k], d.order[k + 1], g);
    d.simple_roots.push_back(sign > 0 ? r : -r);
  }
  d.gram = Matrix(d.rank(), d.rank());
  for (std::size_t a = 0; a < d.rank(); ++a)
    for (std::size_t b = 0; b < d.rank(); ++b) d.gram(a, b) = root_form(d.simple_roots[a], d.simple_roots[b], g);
  return d;
}

/// Recovers the (order, sign) description of a type-A simple root system,
/// preferring a shuffle word (even lines ascending, odd lines ascending).
inline DynkinDiagram diagram_from_simple_roots(const Grading& g, const std::vector<Root>& simple) {
  const int N = g.size();
  if (simple.size() != static_cast<std::size_t>(N - 1)) throw std::invalid_argument("wrong number of simple roots");
  std::vector<int> next(static_cast<std::size_t>(N + 1), 0), has_prev(static_cast<std::size_t>(N + 1), 0);
  for (const auto& r : simple) {
    auto [i, j] = root_lines(r);
    if (next[static_cast<std::size_t>(i)] || has_prev[static_cast<std::size_t>(j)])
      throw std::invalid_argument("simple roots do not form a chain");
    next[static_cast<std::size_t>(i)] = j;
    has_prev[static_cast<std::size_t>(j)] = 1;
  }
  int start = 0;
  for (int k = 1; k <= N; ++k)
    if (!has_prev[static_cast<std::size_t>(k)]) {
      if (start) throw std::invalid_argument("simple roots do not form a chain");
      start = k;
    }
  if (!start) throw std::invalid_argument("simple roots do not form a chain");
  std::vector<int> order;
  for (int k = start; k; k = next[static_cast<std::size_t>(k)]) order.push_back(k);
  if (order.size() != static_cast<std::size_t>(N)) throw std::invalid_argument("simple roots do not form a chain");
  if (is_shuffle_word(order, g)) return diagram_from_order(g, order, 1);
  std::vector<int> reversed(order.rbegin(), order.rend());
  if (is_shuffle_word(reversed, g)) return diagram_from_order(g, reversed, -1);
  return diagram_from_order(g, order, 1);
}

/// All (shuffle word, sign) Borels: sign +1 first, shuffle words in
/// lexicographic order, duplicates dropped.
inline std::vector<DynkinDiagram> enumerate_diagrams(const Grading& g) {
  const int N = g.size();
  std::vector<std::vector<int>> words;
  std::vector<int> perm(static_cast<std::size_t>(N));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (is_shuffle_word(perm, g)) words.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<DynkinDiagram> out;
  for (int sign : {1, -1})
    for (const auto& w : words) {
      DynkinDiagram d = diagram_from_order(g, w, sign);
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
    }
  return out;
}

inline std::vector<DynkinDiagram> enumerate_diagrams(const SuperAlgebra& alg) { return enumerate_diagrams(alg.grading()); }

inline std::optional<std::size_t> simple_index(const DynkinDiagram& d, const Root& a) {
  auto it = std::find(d.simple_roots.begin(), d.simple_roots.end(), a);
  if (it == d.simple_roots.end()) return std::nullopt;
  return static_cast<std::size_t>(it - d.simple_roots.begin());
}

/// Odd reflection at an odd isotropic simple root: alpha -> -alpha,
/// beta -> beta + alpha when (alpha, beta) != 0, other simple roots fixed.
inline DynkinDiagram odd_reflection(const DynkinDiagram& d, const Root& alpha) {
  const Grading& g = d.grading;
  if (!simple_index(d, alpha)) throw std::invalid_argument("odd_reflection: root is not simple in this diagram");
  if (alpha.parity != 1) throw std::invalid_argument("odd_reflection: root is even");
  if (!is_zero(root_form(alpha, alpha, g))) throw std::invalid_argument("odd_reflection: root is not isotropic");
  std::vector<Root> reflected;
  for (const auto& beta : d.simple_roots) {
    if (beta == alpha)
      reflected.push_back(-alpha);
    else if (!is_zero(root_form(alpha, beta, g)))
      reflected.push_back(add(beta, alpha, g));
    else
      reflected.push_back(beta);
  }
  return diagram_from_simple_roots(g, reflected);
}

/// Coordinates of a weight in the simple roots, if integral.
inline std::optional<std::vector<int>> simple_coordinates(const DynkinDiagram& d, const Root& a) {
  std::vector<Vector> cols;
  for (const auto& s : d.simple_roots) {
    Vector v;
    for (int x : s.weight) v.emplace_back(x);
    cols.push_back(std::move(v));
  }
  Vector rhs;
  for (int x : a.weight) rhs.emplace_back(x);
  auto sol = solve(Matrix::from_columns(cols, a.weight.size()), rhs);
  if (!sol) return std::nullopt;
  std::vector<int> out;
  for (const auto& q : *sol) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

inline bool is_positive(const DynkinDiagram& d, const Root& a) {
  auto c = simple_coordinates(d, a);
  return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
}

/// Positive roots ordered by height, then by simple coordinates.
inline std::vector<Root> positive_roots(const DynkinDiagram& d) {
  std::vector<std::pair<std::vector<int>, Root>> keyed;
  for (const auto& r : all_roots(d.grading)) {
    auto c = simple_coordinates(d, r);
    if (!c || std::any_of(c->begin(), c->end(), [](int x) { return x < 0; })) continue;
    std::vector<int> key{std::accumulate(c->begin(), c->end(), 0)};
    key.insert(key.end(), c->begin(), c->end());
    keyed.emplace_back(std::move(key), r);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Root> out;
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

struct RootVectorPair {
  AlgebraElement positive;  // e_alpha
  AlgebraElement negative;  // e_{-alpha}, with (e_alpha, e_{-alpha}) = 1
};

/// Default normalized pair for alpha = eps_i - eps_j positive in d:
/// e_alpha = E_ij, e_{-alpha} = (-1)^{[i]} E_ji.
inline RootVectorPair root_vector_pair(const DynkinDiagram& d, const Root& alpha) {
  if (!is_positive(d, alpha)) throw std::invalid_argument("root_vector_pair: root is not positive in this diagram");
  auto [i, j] = root_lines(alpha);
  return {E(i, j), E(j, i, d.grading.line_parity(i) ? -1 : 1)};
}

/// h_alpha with (h_alpha, h) = alpha(h) on the Cartan subalgebra.
inline AlgebraElement cartan_vector(const Grading& g, const Root& alpha) {
  AlgebraElement h;
  for (std::size_t k = 0; k < alpha.weight.size(); ++k) {
    const int line = static_cast<int>(k + 1);
    const int w = alpha.weight[k];
    if (w) h.add({line, line}, g.line_parity(line) ? -w : w);
  }
  return h;
}

/// alpha(x) for a diagonal element x.
inline Rational evaluate_root(const Root& alpha, const AlgebraElement& x) {
  Rational s = 0;
  for (const auto& [b, c] : x)
    if (b.i == b.j) s += alpha.weight[static_cast<std::size_t>(b.i - 1)] * c;
  return s;
}

/// Basis of the Cartan subalgebra starting with the simple coroots h_alpha,
/// completed by the algebra's own Cartan basis when they do not span (gl).
inline std::vector<AlgebraElement> coroot_basis(const SuperAlgebra& alg, const DynkinDiagram& d) {
  std::vector<AlgebraElement> hs;
  std::vector<Vector> coords;
  auto try_add = [&](const AlgebraElement& h) {
    Vector v = alg.coordinates(h);
    auto extended = coords;
    extended.push_back(v);
    if (span_dimension(extended, alg.dim()) > coords.size()) {
      coords = std::move(extended);
      hs.push_back(h);
    }
  };
  for (const auto& a : d.simple_roots) try_add(cartan_vector(alg.grading(), a));
  for (const auto& h : alg.cartan_basis())
    if (hs.size() < alg.cartan_dim()) try_add(h);
  return hs;
}

/// Omega_0 = sum_i h_i (x) h_i^* over a Cartan basis and its dual.
inline Tensor2 omega0(const SuperAlgebra& alg, const DynkinDiagram& d) {
  const auto hs = coroot_basis(alg, d);
  const auto duals = dual_basis(hs, alg.grading());
  Tensor2 out;
  for (std::size_t a = 0; a < hs.size(); ++a) out += tensor(hs[a], duals[a]);
  return out;
}

}  // namespace superbd
