#pragma once

// gl(m|n) and sl(m|n) in the defining representation: homogeneous basis,
// super-bracket, supertrace form, dual basis and quadratic Casimir.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superbd/rational.hpp"
#include "superbd/tensor.hpp"

namespace superbd {

enum class Kind { gl, sl };

inline std::string to_string(Kind k) { return k == Kind::gl ? "gl" : "sl"; }

inline Kind parse_kind(const std::string& s) {
  if (s == "gl") return Kind::gl;
  if (s == "sl") return Kind::sl;
  throw std::invalid_argument("unknown algebra kind '" + s + "'");
}

/// Gram matrix (x_a, x_b) of a list of elements under the supertrace form.
inline Matrix gram_matrix(const std::vector<AlgebraElement>& xs, const Grading& g) {
  Matrix gram(xs.size(), xs.size());
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < xs.size(); ++b) gram(a, b) = supertrace_form(xs[a], xs[b], g);
  return gram;
}

/// Dual basis {x_a^*} with (x_b, x_a^*) = delta_ab inside span{x_a}; the span
/// must be non-degenerate for the form.
inline std::vector<AlgebraElement> dual_basis(const std::vector<AlgebraElement>& xs, const Grading& g) {
  auto inv = inverse(gram_matrix(xs, g));
  if (!inv) throw std::domain_error("dual_basis: form is degenerate on the given span");
  std::vector<AlgebraElement> duals(xs.size());
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t c = 0; c < xs.size(); ++c)
      if (!is_zero((*inv)(c, a))) duals[a] += xs[c] * (*inv)(c, a);
  return duals;
}

class SuperAlgebra {
 public:
  SuperAlgebra(Kind kind, int m, int n) : kind_(kind), grading_{m, n} {
    if (m < 1 || n < 1) throw std::invalid_argument("gl/sl(m|n) needs m, n >= 1");
    if (kind == Kind::sl && m == n)
      throw std::invalid_argument("sl(n|n) is excluded: the invariant form is degenerate");
    build();
  }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int m() const { return grading_.m; }
  [[nodiscard]] int n() const { return grading_.n; }
  [[nodiscard]] int size() const { return grading_.size(); }
  [[nodiscard]] const Grading& grading() const { return grading_; }
  [[nodiscard]] std::string name() const {
    return to_string(kind_) + "(" + std::to_string(m()) + "," + std::to_string(n()) + ")";
  }

  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::size_t cartan_dim() const { return cartan_dim_; }

  /// Cartan basis first (E_kk for gl; E_kk -/+ E_{k+1,k+1} with zero
  /// supertrace for sl), then E_ij, i != j, in lexicographic order.
  [[nodiscard]] const std::vector<AlgebraElement>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<AlgebraElement>& dual_basis() const { return dual_; }
  [[nodiscard]] int parity(std::size_t a) const { return parities_[a]; }
  [[nodiscard]] const std::vector<int>& parities() const { return parities_; }
  [[nodiscard]] const Matrix& gram() const { return gram_; }
  [[nodiscard]] const Matrix& gram_inverse() const { return gram_inv_; }

  [[nodiscard]] std::vector<AlgebraElement> cartan_basis() const {
    return {basis_.begin(), basis_.begin() + static_cast<std::ptrdiff_t>(cartan_dim_)};
  }

  [[nodiscard]] AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const {
    return supercommutator(x, y, grading_);
  }

  [[nodiscard]] Rational form(const AlgebraElement& x, const AlgebraElement& y) const {
    return supertrace_form(x, y, grading_);
  }

  /// Position of E_ij in the basis, if E_ij is itself a basis vector.
  [[nodiscard]] std::optional<std::size_t> index_of(const BasisIndex& b) const {
    auto it = position_.find(b);
    if (it == position_.end()) return std::nullopt;
    return it->second;
  }

  /// Dual of the basis vector E_ij: (-1)^{[i]} E_ji.
  [[nodiscard]] AlgebraElement dual(const BasisIndex& b) const {
    auto pos = index_of(b);
    if (!pos) throw std::invalid_argument("dual: E_ij is not a basis vector of " + name());
    return dual_[*pos];
  }

  [[nodiscard]] bool contains(const AlgebraElement& x) const {
    if (kind_ == Kind::gl) return true;
    Rational str = 0;
    for (const auto& [b, c] : x)
      if (b.i == b.j) str += grading_.line_parity(b.i) ? Rational(-c) : c;
    return is_zero(str);
  }

  [[nodiscard]] Vector coordinates(const AlgebraElement& x) const {
    Vector v(dim());
    Vector diag(static_cast<std::size_t>(size()));
    for (const auto& [b, c] : x) {
      if (b.i < 1 || b.j < 1 || b.i > size() || b.j > size())
        throw std::out_of_range("matrix index outside " + name());
      if (b.i == b.j)
        diag[static_cast<std::size_t>(b.i - 1)] = c;
      else
        v[position_.at(b)] = c;
    }
    if (kind_ == Kind::gl) {
      for (std::size_t k = 0; k < diag.size(); ++k) v[k] = diag[k];
    } else {
      if (!contains(x)) throw std::invalid_argument("element has nonzero supertrace; not in " + name());
      const Vector c = diag_to_cartan_ * diag;
      for (std::size_t k = 0; k < cartan_dim_; ++k) v[k] = c[k];
    }
    return v;
  }

  [[nodiscard]] AlgebraElement element(const Vector& v) const {
    if (v.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
    AlgebraElement x;
    for (std::size_t a = 0; a < v.size(); ++a)
      if (!is_zero(v[a])) x += basis_[a] * v[a];
    return x;
  }

  /// Omega = sum_a (-1)^{|I_a|} I_a (x) I_a^*.
  [[nodiscard]] Tensor2 casimir() const {
    Tensor2 omega;
    for (std::size_t a = 0; a < dim(); ++a) {
      Tensor2 term = tensor(basis_[a], dual_[a]);
      omega += parities_[a] ? -term : term;
    }
    return omega;
  }

  bool operator==(const SuperAlgebra& o) const { return kind_ == o.kind_ && grading_ == o.grading_; }

 private:
  void build() {
    const int N = size();
    if (kind_ == Kind::gl) {
      for (int k = 1; k <= N; ++k) basis_.push_back(E(k, k));
    } else {
      for (int k = 1; k < N; ++k) {
        const bool same = grading_.line_parity(k) == grading_.line_parity(k + 1);
        basis_.push_back(E(k, k) + E(k + 1, k + 1, same ? -1 : 1));
      }
    }
    cartan_dim_ = basis_.size();
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        if (i != j) {
          position_[{i, j}] = basis_.size();
          basis_.push_back(E(i, j));
        }
    if (kind_ == Kind::gl)
      for (int k = 1; k <= N; ++k) position_[{k, k}] = static_cast<std::size_t>(k - 1);
    for (const auto& x : basis_) parities_.push_back(parity_of(x, grading_));

    gram_ = gram_matrix(basis_, grading_);
    auto inv = inverse(gram_);
    if (!inv) throw std::domain_error("supertrace form degenerate on " + name());
    gram_inv_ = *inv;
    dual_ = superbd::dual_basis(basis_, grading_);

    if (kind_ == Kind::sl) {
      // c_a = (d, h_a^*) for a supertraceless diagonal d.
      diag_to_cartan_ = Matrix(cartan_dim_, static_cast<std::size_t>(N));
      for (std::size_t a = 0; a < cartan_dim_; ++a)
        for (int k = 1; k <= N; ++k)
          diag_to_cartan_(a, static_cast<std::size_t>(k - 1)) = supertrace_form(E(k, k), dual_[a], grading_);
    }
  }

  Kind kind_;
  Grading grading_;
  std::size_t cartan_dim_ = 0;
  std::vector<AlgebraElement> basis_;
  std::vector<AlgebraElement> dual_;
  std::vector<int> parities_;
  std::map<BasisIndex, std::size_t> position_;
  Matrix gram_;
  Matrix gram_inv_;
  Matrix diag_to_cartan_;
};

inline SuperAlgebra make_algebra(Kind kind, int m, int n) { return SuperAlgebra(kind, m, n); }

/// Parses "kind:m:n", e.g. "sl:2:1".
inline SuperAlgebra parse_algebra(const std::string& spec) {
  const auto a = spec.find(':');
  const auto b = a == std::string::npos ? std::string::npos : spec.find(':', a + 1);
  if (b == std::string::npos) throw std::invalid_argument("algebra must be written kind:m:n, got '" + spec + "'");
  try {
    std::size_t used_m = 0, used_n = 0;
    const std::string ms = spec.substr(a + 1, b - a - 1), ns = spec.substr(b + 1);
    const int m = std::stoi(ms, &used_m);
    const int n = std::stoi(ns, &used_n);
    if (used_m != ms.size() || used_n != ns.size()) throw std::invalid_argument("trailing characters");
    return SuperAlgebra(parse_kind(spec.substr(0, a)), m, n);
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("bad algebra '" + spec + "': " + e.what());
  }
}

}  // namespace superbd
