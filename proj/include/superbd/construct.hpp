#pragma once

// From an admissible triple to an r-matrix, by two independent routes:
//  * the closed formula r = r0 + sum e_{-a}(x)e_a + sum_{a<b}(...), and
//  * the operator route f = f0 + f_+ + f_- with f_+ = psi/(psi - 1),
//    r = (f (x) 1) Omega.
// Also the (modified) Cayley transform of an operator f.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "superbd/linear_operator.hpp"
#include "superbd/rational.hpp"
#include "superbd/roots.hpp"
#include "superbd/superalgebra.hpp"
#include "superbd/tensor.hpp"
#include "superbd/triples.hpp"

namespace superbd {

/// Elementary matrix E_ij spanning the root space of eps_i - eps_j.
inline AlgebraElement root_space_vector(const Root& a) {
  auto [i, j] = root_lines(a);
  return E(i, j);
}

/// The isomorphism g_1 -> g_2 generated by e_a -> e_{tau a}, e_{-a} -> e_{-tau a},
/// h_a -> h_{tau a} for a in Gamma_1, stored as an operator on all of g that
/// vanishes on the complement spanned by the other coroots and root vectors.
struct PhiMap {
  LinearOperator op;
  std::vector<AlgebraElement> domain;  // spans g_1
  std::map<Root, AlgebraElement> on_root_vectors;  // phi(E_gamma) for +-gamma in closure(Gamma_1)
};

inline PhiMap build_phi(const SuperAlgebra& alg, const AdmissibleTriple& t) {
  const DynkinDiagram& d = t.diagram;
  const Grading& g = alg.grading();
  const TauExtension ext = extend_tau(t);
  PhiMap phi;

  auto sign_of_line = [&](int k) { return g.line_parity(k) ? -1 : 1; };
  for (const auto& [a, ta] : t.tau) {
    const Root& alpha = d.simple_roots[a];
    const Root& image = d.simple_roots[ta];
    auto [i, j] = root_lines(alpha);
    auto [ti, tj] = root_lines(image);
    phi.on_root_vectors[alpha] = E(ti, tj);
    // E_ji = (-1)^{[i]} e_{-alpha}, and e_{-alpha} maps to (-1)^{[ti]} E_{tj,ti}.
    phi.on_root_vectors[-alpha] = E(tj, ti, sign_of_line(i) * sign_of_line(ti));
  }

  // Composite roots, by height: beta = alpha + gamma with alpha simple in Gamma_1.
  for (const auto& beta : ext.domain) {
    if (phi.on_root_vectors.count(beta)) continue;
    bool done = false;
    for (std::size_t a : t.gamma1) {
      const Root& alpha = d.simple_roots[a];
      std::vector<int> w(beta.weight.size());
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = beta.weight[k] - alpha.weight[k];
      const Root gamma = make_root(std::move(w), g);
      if (!ext.in_domain(gamma) || !phi.on_root_vectors.count(gamma)) continue;
      for (int s : {1, -1}) {
        const Root x = s > 0 ? alpha : -alpha;
        const Root y = s > 0 ? gamma : -gamma;
        const Root target = s > 0 ? beta : -beta;
        const AlgebraElement br = alg.bracket(root_space_vector(x), root_space_vector(y));
        auto [ti, tj] = root_lines(target);
        const Rational c = br.coeff({ti, tj});
        if (is_zero(c)) break;
        phi.on_root_vectors[target] = alg.bracket(phi.on_root_vectors.at(x), phi.on_root_vectors.at(y)) * Rational(1 / c);
      }
      if (phi.on_root_vectors.count(beta) && phi.on_root_vectors.count(-beta)) {
        done = true;
        break;
      }
    }
    if (!done) throw std::logic_error("build_phi: composite root vector not reachable by brackets");
  }

  std::vector<AlgebraElement> domain, images;
  const auto hs = coroot_basis(alg, d);
  for (std::size_t k = 0; k < hs.size(); ++k) {
    domain.push_back(hs[k]);
    auto img = k < d.rank() ? t.image(k) : std::nullopt;
    images.push_back(img ? cartan_vector(g, d.simple_roots[*img]) : AlgebraElement{});
    if (img) phi.domain.push_back(hs[k]);
  }
  for (const auto& r : all_roots(g)) {
    domain.push_back(root_space_vector(r));
    auto it = phi.on_root_vectors.find(r);
    images.push_back(it == phi.on_root_vectors.end() ? AlgebraElement{} : it->second);
    if (it != phi.on_root_vectors.end()) phi.domain.push_back(root_space_vector(r));
  }
  phi.op = from_images(alg, domain, images);
  return phi;
}

/// Root vectors e_a for every root a (both signs) with (e_a, e_{-a}) = 1 for a
/// positive and phi(e_a) = e_{tau_bar a} on the closure of Gamma_1.
using RootVectors = std::map<Root, AlgebraElement>;

inline RootVectors consistent_root_vectors(const SuperAlgebra& alg, const AdmissibleTriple& t, const PhiMap& phi) {
  const DynkinDiagram& d = t.diagram;
  RootVectors e;
  for (const auto& a : positive_roots(d)) {
    auto pair = root_vector_pair(d, a);
    e[a] = pair.positive;
    e[-a] = pair.negative;
  }
  const TauExtension ext = extend_tau(t);
  std::vector<Root> images;
  for (const auto& [from, to] : ext.map) images.push_back(to);
  for (const auto& start : ext.domain) {
    if (std::find(images.begin(), images.end(), start) != images.end()) continue;
    Root cur = start;
    while (ext.in_domain(cur)) {
      const Root next = ext.map.at(cur);
      const AlgebraElement pushed = apply(alg, phi.op, e.at(cur));
      const AlgebraElement basis_vec = root_space_vector(next);
      auto [i, j] = root_lines(next);
      const Rational scale = pushed.coeff({i, j});
      if (is_zero(scale) || !(pushed == basis_vec * scale))
        throw std::logic_error("consistent_root_vectors: phi does not map root spaces to root spaces");
      const Rational old_scale = e.at(next).coeff({i, j});
      e[next] = pushed;
      e[-next] = e.at(-next) * Rational(old_scale / scale);
      cur = next;
    }
  }
  return e;
}

inline RootVectors consistent_root_vectors(const SuperAlgebra& alg, const AdmissibleTriple& t) {
  return consistent_root_vectors(alg, t, build_phi(alg, t));
}

/// Affine family of solutions r0 in h (x) h of
///   r0 + r0^21 = Omega_0 and (tau(a) (x) 1) r0 + (1 (x) a) r0 = 0 for a in Gamma_1,
/// parametrized as r0 = (f0 (x) 1) Omega_0 with f0 = 1/2 + (form-antisymmetric part).
struct R0Solution {
  LinearOperator particular_f0;              // on the Cartan basis
  std::vector<LinearOperator> nullspace_f0;  // each n with n + n^* = 0
  Tensor2 particular;
  std::vector<Tensor2> nullspace;

  [[nodiscard]] LinearOperator f0(const std::vector<Rational>& coeffs) const {
    if (coeffs.size() != nullspace_f0.size()) throw std::invalid_argument("r0: wrong number of family coefficients");
    LinearOperator f = particular_f0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) f = f + coeffs[k] * nullspace_f0[k];
    return f;
  }

  [[nodiscard]] Tensor2 r0(const std::vector<Rational>& coeffs) const {
    if (coeffs.size() != nullspace.size()) throw std::invalid_argument("r0: wrong number of family coefficients");
    Tensor2 r = particular;
    for (std::size_t k = 0; k < coeffs.size(); ++k) r += nullspace[k] * coeffs[k];
    return r;
  }

  /// Coefficients of an explicit r0 in this family, if it belongs to it.
  [[nodiscard]] std::optional<std::vector<Rational>> coefficients_of(const Tensor2& r0) const {
    std::map<std::array<BasisIndex, 2>, std::size_t> keys;
    auto index = [&](const Tensor2& t) {
      for (const auto& [k, c] : t) keys.try_emplace(k, keys.size());
    };
    index(r0);
    index(particular);
    for (const auto& n : nullspace) index(n);
    auto dense = [&](const Tensor2& t) {
      Vector v(keys.size());
      for (const auto& [k, c] : t) v[keys.at(k)] = c;
      return v;
    };
    std::vector<Vector> cols;
    for (const auto& n : nullspace) cols.push_back(dense(n));
    const Vector rhs = dense(r0 - particular);
    if (cols.empty()) return is_zero(rhs) ? std::optional<std::vector<Rational>>{std::vector<Rational>{}} : std::nullopt;
    auto sol = solve(Matrix::from_columns(cols, keys.size()), rhs);
    if (!sol) return std::nullopt;
    return *sol;
  }
};

/// Omega_0 over the algebra's Cartan basis and its dual, as pairs.
inline std::pair<std::vector<AlgebraElement>, std::vector<AlgebraElement>> cartan_dual_pair(const SuperAlgebra& alg) {
  auto hs = alg.cartan_basis();
  auto duals = dual_basis(hs, alg.grading());
  return {hs, duals};
}

inline Vector cartan_coordinates(const SuperAlgebra& alg, const AlgebraElement& h) {
  Vector full = alg.coordinates(h);
  for (std::size_t k = alg.cartan_dim(); k < full.size(); ++k)
    if (!is_zero(full[k])) throw std::invalid_argument("element is not in the Cartan subalgebra");
  full.resize(alg.cartan_dim());
  return full;
}

inline AlgebraElement cartan_element(const SuperAlgebra& alg, const Vector& v) {
  Vector full(alg.dim());
  for (std::size_t k = 0; k < v.size(); ++k) full[k] = v[k];
  return alg.element(full);
}

/// (f0 (x) 1) Omega_0 for an operator on the Cartan basis.
inline Tensor2 cartan_tensor(const SuperAlgebra& alg, const LinearOperator& f0) {
  auto [hs, duals] = cartan_dual_pair(alg);
  Tensor2 out;
  for (std::size_t a = 0; a < hs.size(); ++a) out += tensor(cartan_element(alg, f0.matrix.column(a)), duals[a]);
  return out;
}

inline R0Solution solve_r0(const SuperAlgebra& alg, const AdmissibleTriple& t) {
  const std::size_t r = alg.cartan_dim();
  const Matrix gram = cartan_gram(alg);
  const Matrix gram_inv = *inverse(gram);
  std::vector<Matrix> antisym;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Matrix s(r, r);
      s(i, j) = 1;
      s(j, i) = -1;
      antisym.push_back(gram_inv * s);
    }

  // a (h_{tau a} - h_a) = 1/2 (h_{tau a} + h_a) for each a in Gamma_1.
  std::vector<Vector> rows;
  Vector rhs;
  const Grading& g = alg.grading();
  for (const auto& [a, ta] : t.tau) {
    const Vector ha = cartan_coordinates(alg, cartan_vector(g, t.diagram.simple_roots[a]));
    const Vector hta = cartan_coordinates(alg, cartan_vector(g, t.diagram.simple_roots[ta]));
    Vector u(r), v(r);
    for (std::size_t k = 0; k < r; ++k) {
      u[k] = hta[k] - ha[k];
      v[k] = (hta[k] + ha[k]) / 2;
    }
    std::vector<Vector> images;
    for (const auto& basis_op : antisym) images.push_back(basis_op * u);
    for (std::size_t i = 0; i < r; ++i) {
      Vector row(antisym.size());
      for (std::size_t k = 0; k < antisym.size(); ++k) row[k] = images[k][i];
      rows.push_back(std::move(row));
      rhs.push_back(v[i]);
    }
  }

  Vector x(antisym.size());
  std::vector<Vector> null;
  if (rows.empty()) {
    for (std::size_t k = 0; k < antisym.size(); ++k) {
      Vector e(antisym.size());
      e[k] = 1;
      null.push_back(std::move(e));
    }
  } else {
    const Matrix system = Matrix::from_rows(rows, antisym.size());
    auto sol = solve(system, rhs);
    if (!sol) throw std::runtime_error("solve_r0: the r0 system is inconsistent for this triple");
    x = *sol;
    null = nullspace(system);
  }

  auto combine = [&](const Vector& coeffs) {
    Matrix m(r, r);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!is_zero(coeffs[k])) m += coeffs[k] * antisym[k];
    return m;
  };
  R0Solution out;
  out.particular_f0 = {Rational(1, 2) * Matrix::identity(r) + combine(x)};
  out.particular = cartan_tensor(alg, out.particular_f0);
  for (const auto& n : null) {
    out.nullspace_f0.push_back({combine(n)});
    out.nullspace.push_back(cartan_tensor(alg, out.nullspace_f0.back()));
  }
  return out;
}

struct RMatrix {
  Tensor2 tensor;
  AdmissibleTriple triple;
  std::vector<Rational> r0_coefficients;  // multipliers of the r0 nullspace generators
};

/// r = r0 + sum_{a>0} e_{-a}(x)e_a + sum_{a<b} (e_{-a}(x)e_b - (-1)^{|a|} e_b(x)e_{-a}).
inline Tensor2 assemble_tensor(const SuperAlgebra& alg, const AdmissibleTriple& t, const Tensor2& r0) {
  const RootVectors e = consistent_root_vectors(alg, t);
  Tensor2 r = r0;
  for (const auto& a : positive_roots(t.diagram)) r += tensor(e.at(-a), e.at(a));
  for (const auto& [a, b] : partial_order(t).pairs) {
    r += tensor(e.at(-a), e.at(b));
    Tensor2 back = tensor(e.at(b), e.at(-a));
    r += a.parity ? back : -back;
  }
  return r;
}

inline RMatrix assemble_r(const SuperAlgebra& alg, const AdmissibleTriple& t, const Tensor2& r0) {
  const R0Solution family = solve_r0(alg, t);
  auto coeffs = family.coefficients_of(r0);
  if (!coeffs) throw std::invalid_argument("assemble_r: r0 is not in the solution family of this triple");
  return {assemble_tensor(alg, t, r0), t, *coeffs};
}

inline RMatrix assemble_r(const SuperAlgebra& alg, const AdmissibleTriple& t, const std::vector<Rational>& coeffs) {
  const R0Solution family = solve_r0(alg, t);
  return {assemble_tensor(alg, t, family.r0(coeffs)), t, coeffs};
}

/// Projector onto the span of the root vectors of positive (sign > 0) or
/// negative (sign < 0) roots of the diagram.
inline LinearOperator root_projector(const SuperAlgebra& alg, const DynkinDiagram& d, int sign) {
  LinearOperator p = LinearOperator::zero(alg.dim());
  for (const auto& a : positive_roots(d)) {
    auto [i, j] = root_lines(sign > 0 ? a : -a);
    const std::size_t k = *alg.index_of({i, j});
    p.matrix(k, k) = 1;
  }
  return p;
}

/// The operator route: psi = phi on g_1 cap n_+, zero on the rest of n_+;
/// f_+ = -(psi + psi^2 + ...), f_- = 1 + psi^* + psi^*2 + ..., f = f0 + f_+ + f_-.
inline LinearOperator build_f(const SuperAlgebra& alg, const AdmissibleTriple& t, const LinearOperator& f0) {
  if (f0.dim() != alg.cartan_dim()) throw std::invalid_argument("build_f: f0 must act on the Cartan subalgebra");
  const PhiMap phi = build_phi(alg, t);
  const LinearOperator psi = phi.op * root_projector(alg, t.diagram, 1);
  const LinearOperator psi_adj = adjoint(alg, psi);

  LinearOperator f_plus = LinearOperator::zero(alg.dim());
  LinearOperator f_minus = root_projector(alg, t.diagram, -1);
  LinearOperator power = psi;
  LinearOperator power_adj = psi_adj;
  std::size_t steps = 0;
  while (!power.matrix.is_zero()) {
    if (++steps > alg.dim()) throw std::logic_error("build_f: psi is not nilpotent, psi - 1 may be singular");
    f_plus = f_plus - power;
    f_minus = f_minus + power_adj;
    power = power * psi;
    power_adj = power_adj * psi_adj;
  }
  return extend_from_cartan(alg, f0) + f_plus + f_minus;
}

/// Modified Cayley transform Theta : Im(f-1)/Ker(f) -> Im(f)/Ker(f-1),
/// (f-1)x + Ker f  |->  f x + Ker(f-1). Subspaces are in basis coordinates.
struct CayleyTransform {
  std::vector<Vector> im_f_minus_1;
  std::vector<Vector> ker_f;
  std::vector<Vector> im_f;
  std::vector<Vector> ker_f_minus_1;
  std::vector<Vector> domain_reps;    // complete Ker f to Im(f-1)
  std::vector<Vector> codomain_reps;  // complete Ker(f-1) to Im f
  Matrix theta;  // column k: codomain_reps coordinates of Theta(domain_reps[k])
  bool well_defined = true;
};

namespace detail {

inline std::vector<Vector> complete_to(const std::vector<Vector>& sub, const std::vector<Vector>& whole) {
  std::vector<Vector> chosen = sub, reps;
  for (const auto& v : whole) {
    if (span_contains(chosen, v)) continue;
    chosen.push_back(v);
    reps.push_back(v);
  }
  return reps;
}

/// Coordinates of v in reps modulo the span of `modulo`; nullopt if v is not
/// in span(reps + modulo).
inline std::optional<Vector> coordinates_mod(const Vector& v, const std::vector<Vector>& reps,
                                             const std::vector<Vector>& modulo) {
  std::vector<Vector> cols = reps;
  cols.insert(cols.end(), modulo.begin(), modulo.end());
  if (cols.empty()) return is_zero(v) ? std::optional<Vector>{Vector{}} : std::nullopt;
  auto sol = solve(Matrix::from_columns(cols, v.size()), v);
  if (!sol) return std::nullopt;
  sol->resize(reps.size());
  return sol;
}

}  // namespace detail

inline CayleyTransform cayley(const SuperAlgebra& alg, const LinearOperator& f) {
  const std::size_t dim = alg.dim();
  const Matrix fm1 = f.matrix - Matrix::identity(dim);
  CayleyTransform c;
  c.im_f_minus_1 = image(fm1);
  c.ker_f = span_basis(kernel(f.matrix), dim);
  c.im_f = image(f.matrix);
  c.ker_f_minus_1 = span_basis(kernel(fm1), dim);
  c.domain_reps = detail::complete_to(c.ker_f, c.im_f_minus_1);
  c.codomain_reps = detail::complete_to(c.ker_f_minus_1, c.im_f);

  auto theta_of = [&](const Vector& u) -> std::optional<Vector> {
    auto x = solve(fm1, u);
    if (!x) return std::nullopt;
    return detail::coordinates_mod(f.matrix * *x, c.codomain_reps, c.ker_f_minus_1);
  };
  c.theta = Matrix(c.codomain_reps.size(), c.domain_reps.size());
  for (std::size_t k = 0; k < c.domain_reps.size(); ++k) {
    auto col = theta_of(c.domain_reps[k]);
    if (!col) {
      c.well_defined = false;
      continue;
    }
    c.theta.set_column(k, *col);
  }
  // Representatives of zero must map to zero.
  for (const auto& k : c.ker_f) {
    auto image_of_k = theta_of(k);
    if (!image_of_k || !is_zero(*image_of_k)) c.well_defined = false;
  }
  return c;
}

}  // namespace superbd
