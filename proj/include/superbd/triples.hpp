#pragma once

// Admissible triples (Gamma_1, Gamma_2, tau) on a fixed simple root system,
// the linear extension of tau and the partial order it induces.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superbd/roots.hpp"

namespace superbd {

using TauMap = std::vector<std::pair<std::size_t, std::size_t>>;

struct AdmissibleTriple {
  DynkinDiagram diagram;
  std::vector<std::size_t> gamma1;  // indices into diagram.simple_roots
  std::vector<std::size_t> gamma2;
  TauMap tau;  // sorted by source index

  [[nodiscard]] bool empty() const { return tau.empty(); }

  [[nodiscard]] std::optional<std::size_t> image(std::size_t from) const {
    for (const auto& [a, b] : tau)
      if (a == from) return b;
    return std::nullopt;
  }
};

inline bool is_admissible(const DynkinDiagram& d, const std::vector<std::size_t>& gamma1,
                          const std::vector<std::size_t>& gamma2, const TauMap& tau) {
  const std::size_t r = d.rank();
  if (gamma1.size() != gamma2.size() || tau.size() != gamma1.size()) return false;
  std::map<std::size_t, std::size_t> t;
  for (const auto& [a, b] : tau) {
    if (a >= r || b >= r) return false;
    if (std::find(gamma1.begin(), gamma1.end(), a) == gamma1.end()) return false;
    if (std::find(gamma2.begin(), gamma2.end(), b) == gamma2.end()) return false;
    if (!t.emplace(a, b).second) return false;
  }
  {
    std::vector<std::size_t> targets;
    for (const auto& [a, b] : t) targets.push_back(b);
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) return false;
    if (t.size() != gamma1.size()) return false;
  }
  const Grading& g = d.grading;
  for (const auto& [a, ta] : t) {
    if (d.simple_roots[a].parity != d.simple_roots[ta].parity) return false;
    for (const auto& [b, tb] : t)
      if (root_form(d.simple_roots[ta], d.simple_roots[tb], g) != root_form(d.simple_roots[a], d.simple_roots[b], g))
        return false;
  }
  // Every tau-orbit must leave Gamma_1.
  for (const auto& [a, ta] : t) {
    std::size_t cur = a;
    std::size_t steps = 0;
    while (t.count(cur)) {
      cur = t.at(cur);
      if (++steps > t.size()) return false;
    }
  }
  return true;
}

inline bool is_admissible(const AdmissibleTriple& t) { return is_admissible(t.diagram, t.gamma1, t.gamma2, t.tau); }

inline AdmissibleTriple make_triple(const DynkinDiagram& d, TauMap tau) {
  std::sort(tau.begin(), tau.end());
  AdmissibleTriple t{d, {}, {}, tau};
  for (const auto& [a, b] : tau) {
    t.gamma1.push_back(a);
    t.gamma2.push_back(b);
  }
  std::sort(t.gamma1.begin(), t.gamma1.end());
  std::sort(t.gamma2.begin(), t.gamma2.end());
  if (!is_admissible(t)) throw std::invalid_argument("triple is not admissible");
  return t;
}

namespace detail {

inline void subsets_of_size(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_of_size(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every admissible triple, the empty one first. Candidates are all pairs of
/// equal-size subsets with every bijection between them, in lexicographic
/// order, filtered by is_admissible.
inline std::vector<AdmissibleTriple> enumerate_triples(const DynkinDiagram& d) {
  std::vector<AdmissibleTriple> out;
  const std::size_t r = d.rank();
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    detail::subsets_of_size(r, k, 0, cur, subsets);
    for (const auto& s1 : subsets)
      for (const auto& s2 : subsets) {
        auto targets = s2;
        do {
          TauMap tau;
          for (std::size_t i = 0; i < k; ++i) tau.emplace_back(s1[i], targets[i]);
          if (is_admissible(d, s1, s2, tau)) out.push_back({d, s1, s2, tau});
        } while (std::next_permutation(targets.begin(), targets.end()));
      }
  }
  return out;
}

/// Positive roots that are nonnegative integral combinations of the given
/// simple roots.
inline std::vector<Root> root_closure(const DynkinDiagram& d, const std::vector<std::size_t>& subset) {
  std::vector<Root> out;
  if (subset.empty()) return out;
  for (const auto& r : positive_roots(d)) {
    auto c = simple_coordinates(d, r);
    bool inside = true;
    for (std::size_t k = 0; k < c->size(); ++k)
      if ((*c)[k] != 0 && std::find(subset.begin(), subset.end(), k) == subset.end()) inside = false;
    if (inside) out.push_back(r);
  }
  return out;
}

/// tau extended linearly from Gamma_1 to the closure of Gamma_1.
struct TauExtension {
  std::vector<Root> domain;    // closure of Gamma_1
  std::vector<Root> codomain;  // closure of Gamma_2
  std::map<Root, Root> map;

  [[nodiscard]] bool in_domain(const Root& r) const { return map.count(r) > 0; }
  [[nodiscard]] bool in_codomain(const Root& r) const {
    return std::find(codomain.begin(), codomain.end(), r) != codomain.end();
  }
};

inline TauExtension extend_tau(const AdmissibleTriple& t) {
  const DynkinDiagram& d = t.diagram;
  TauExtension ext{root_closure(d, t.gamma1), root_closure(d, t.gamma2), {}};
  for (const auto& beta : ext.domain) {
    const auto c = *simple_coordinates(d, beta);
    std::vector<int> w(beta.weight.size(), 0);
    for (const auto& [a, ta] : t.tau)
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += c[a] * d.simple_roots[ta].weight[k];
    Root image = make_root(std::move(w), d.grading);
    if (!is_root(image) || !ext.in_codomain(image))
      throw std::logic_error("extend_tau: image of a root is not a root of the target closure");
    ext.map.emplace(beta, image);
  }
  return ext;
}

struct PartialOrder {
  std::vector<std::pair<Root, Root>> pairs;  // (alpha, beta) with alpha < beta

  [[nodiscard]] bool less(const Root& a, const Root& b) const {
    return std::find(pairs.begin(), pairs.end(), std::pair<Root, Root>{a, b}) != pairs.end();
  }
};

/// alpha < beta iff beta = tau_bar^k(alpha) for some k >= 1.
inline PartialOrder partial_order(const AdmissibleTriple& t) {
  const TauExtension ext = extend_tau(t);
  PartialOrder order;
  for (const auto& alpha : ext.domain) {
    Root cur = alpha;
    while (ext.in_domain(cur)) {
      cur = ext.map.at(cur);
      order.pairs.emplace_back(alpha, cur);
    }
  }
  return order;
}

}  // namespace superbd
