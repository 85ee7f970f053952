#pragma once

// Exact checks: CYBE and unitarity of a tensor, the r <-> f dictionary, the
// operator form of the equations, the Cartan equations for r0 and the
// Cayley-transform criteria.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superbd/construct.hpp"
#include "superbd/linear_operator.hpp"
#include "superbd/rational.hpp"
#include "superbd/roots.hpp"
#include "superbd/superalgebra.hpp"
#include "superbd/tensor.hpp"
#include "superbd/triples.hpp"

namespace superbd {

/// [r12,r13] + [r12,r23] + [r13,r23].
inline Tensor3 cybe_residual(const SuperAlgebra& alg, const Tensor2& r) {
  const Grading& g = alg.grading();
  Tensor3 out = bracket(embed(r, Legs::L12), embed(r, Legs::L13), g);
  out += bracket(embed(r, Legs::L12), embed(r, Legs::L23), g);
  out += bracket(embed(r, Legs::L13), embed(r, Legs::L23), g);
  return out;
}

/// r + r^21 - Omega.
inline Tensor2 unitarity_residual(const SuperAlgebra& alg, const Tensor2& r) {
  return r + graded_flip(r, alg.grading()) - alg.casimir();
}

/// (f (x) 1) Omega.
inline Tensor2 f_to_r(const SuperAlgebra& alg, const LinearOperator& f) { return apply_left(alg, f, alg.casimir()); }

/// Inverse of f_to_r: f(I_b) = sum over x (x) y in r of c x (y, I_b).
inline LinearOperator r_to_f(const SuperAlgebra& alg, const Tensor2& r) {
  const auto& basis = alg.basis();
  std::vector<AlgebraElement> images(alg.dim());
  for (const auto& [k, c] : r) {
    const AlgebraElement y = E(k[1].i, k[1].j);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational pairing = alg.form(y, basis[b]);
      if (!is_zero(pairing)) images[b].add(k[0], c * pairing);
    }
  }
  LinearOperator f = LinearOperator::zero(alg.dim());
  for (std::size_t b = 0; b < basis.size(); ++b) f.matrix.set_column(b, alg.coordinates(images[b]));
  return f;
}

inline bool f_unitarity_holds(const SuperAlgebra& alg, const LinearOperator& f) {
  return f + adjoint(alg, f) == LinearOperator::identity(alg.dim());
}

struct FEquationsReport {
  bool f_unitarity = false;
  std::vector<std::pair<std::size_t, std::size_t>> f_ybe_failures;  // basis index pairs

  [[nodiscard]] bool f_ybe() const { return f_ybe_failures.empty(); }
  [[nodiscard]] bool ok() const { return f_unitarity && f_ybe(); }
};

/// f + f^* = 1 and (f-1)[fx, fy] = f[(f-1)x, (f-1)y] on all basis pairs.
inline FEquationsReport f_equations_check(const SuperAlgebra& alg, const LinearOperator& f) {
  FEquationsReport rep;
  rep.f_unitarity = f_unitarity_holds(alg, f);
  const std::size_t n = alg.dim();
  const Matrix fm1 = f.matrix - Matrix::identity(n);
  std::vector<AlgebraElement> fx(n), gx(n);
  for (std::size_t a = 0; a < n; ++a) {
    fx[a] = alg.element(f.matrix.column(a));
    gx[a] = alg.element(fm1.column(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector lhs = fm1 * alg.coordinates(alg.bracket(fx[a], fx[b]));
      const Vector rhs = f.matrix * alg.coordinates(alg.bracket(gx[a], gx[b]));
      if (lhs != rhs) rep.f_ybe_failures.emplace_back(a, b);
    }
  return rep;
}

/// Whether "(f (x) 1) Omega solves the CYBE" and "f satisfies the operator
/// equation on all basis pairs" agree. Requires f + f^* = 1.
inline bool operator_tensor_equivalence(const SuperAlgebra& alg, const LinearOperator& f) {
  if (!f_unitarity_holds(alg, f)) throw std::invalid_argument("operator_tensor_equivalence: f + f^* != 1");
  const bool cybe_ok = cybe_residual(alg, f_to_r(alg, f)).is_zero();
  const bool f_ok = f_equations_check(alg, f).f_ybe();
  return cybe_ok == f_ok;
}

struct CayleyReport {
  bool im_f_closed = false;
  bool im_f_minus_1_closed = false;
  bool kernel_is_perp = false;  // Ker f = Im(f-1)^perp
  bool well_defined = false;
  bool bijective = false;
  bool homomorphism = false;
  bool isometry = false;

  [[nodiscard]] bool subalgebras() const { return im_f_closed && im_f_minus_1_closed; }
  [[nodiscard]] bool isomorphism() const { return well_defined && bijective && homomorphism; }
  [[nodiscard]] bool ok() const { return subalgebras() && kernel_is_perp && isomorphism() && isometry; }
};

inline bool closed_under_bracket(const SuperAlgebra& alg, const std::vector<Vector>& span) {
  for (const auto& u : span)
    for (const auto& v : span)
      if (!span_contains(span, alg.coordinates(alg.bracket(alg.element(u), alg.element(v))))) return false;
  return true;
}

inline CayleyReport cayley_check(const SuperAlgebra& alg, const LinearOperator& f) {
  CayleyReport rep;
  const std::size_t n = alg.dim();
  const CayleyTransform c = cayley(alg, f);
  const Matrix fm1 = f.matrix - Matrix::identity(n);

  rep.im_f_closed = closed_under_bracket(alg, c.im_f);
  rep.im_f_minus_1_closed = closed_under_bracket(alg, c.im_f_minus_1);
  rep.kernel_is_perp = same_span(c.ker_f, orthogonal_complement(c.im_f_minus_1, alg.gram()), n);
  rep.well_defined = c.well_defined;
  rep.bijective = c.well_defined && c.theta.rows() == c.theta.cols() && rank(c.theta) == c.theta.rows();
  if (!rep.well_defined) return rep;

  // Preimages x_k with (f-1)x_k = u_k; f x_k represents Theta(u_k).
  std::vector<AlgebraElement> us, ws;
  for (const auto& u : c.domain_reps) {
    auto x = solve(fm1, u);
    us.push_back(alg.element(u));
    ws.push_back(alg.element(f.matrix * *x));
  }

  rep.isometry = true;
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < us.size(); ++j)
      if (alg.form(us[i], us[j]) != alg.form(ws[i], ws[j])) rep.isometry = false;

  rep.homomorphism = rep.im_f_minus_1_closed;
  for (std::size_t i = 0; i < us.size() && rep.homomorphism; ++i)
    for (std::size_t j = 0; j < us.size() && rep.homomorphism; ++j) {
      auto x = solve(fm1, alg.coordinates(alg.bracket(us[i], us[j])));
      if (!x) {
        rep.homomorphism = false;
        break;
      }
      const AlgebraElement diff = alg.element(f.matrix * *x) - alg.bracket(ws[i], ws[j]);
      if (!span_contains(c.ker_f_minus_1, alg.coordinates(diff))) rep.homomorphism = false;
    }
  return rep;
}

/// r0 + r0^21 = Omega_0 and (tau(a) (x) 1) r0 + (1 (x) a) r0 = 0 for a in Gamma_1.
struct R0Report {
  bool symmetric_part = false;
  bool tau_equations = false;
  [[nodiscard]] bool ok() const { return symmetric_part && tau_equations; }
};

inline R0Report r0_equations_check(const SuperAlgebra& alg, const AdmissibleTriple& t, const Tensor2& r0) {
  R0Report rep;
  rep.symmetric_part = r0 + graded_flip(r0, alg.grading()) == omega0(alg, t.diagram);
  rep.tau_equations = true;
  for (const auto& [a, ta] : t.tau) {
    const Root& alpha = t.diagram.simple_roots[a];
    const Root& image = t.diagram.simple_roots[ta];
    AlgebraElement sum;
    for (const auto& [k, c] : r0) {
      const AlgebraElement x = E(k[0].i, k[0].j), y = E(k[1].i, k[1].j);
      sum += y * Rational(c * evaluate_root(image, x));
      sum += x * Rational(c * evaluate_root(alpha, y));
    }
    if (!sum.is_zero()) rep.tau_equations = false;
  }
  return rep;
}

struct VerificationReport {
  Tensor2 unitarity_residual;
  Tensor3 cybe_residual;
  bool f_unitarity = false;
  std::vector<std::pair<std::size_t, std::size_t>> f_ybe_failures;
  std::optional<CayleyReport> cayley;
  std::string notes;

  [[nodiscard]] bool unitarity() const { return unitarity_residual.is_zero(); }
  [[nodiscard]] bool cybe() const { return cybe_residual.is_zero(); }
  [[nodiscard]] bool f_ybe() const { return f_ybe_failures.empty(); }
  [[nodiscard]] bool ok() const {
    return unitarity() && cybe() && f_unitarity && f_ybe() && (!cayley || cayley->ok());
  }
};

/// Every check on r: tensor equations, the operator equations for
/// f = r_to_f(r) and, when f + f^* = 1, the Cayley criteria.
inline VerificationReport verify_r_matrix(const SuperAlgebra& alg, const Tensor2& r, bool with_cayley = true) {
  VerificationReport rep;
  rep.unitarity_residual = unitarity_residual(alg, r);
  rep.cybe_residual = cybe_residual(alg, r);
  LinearOperator f;
  try {
    f = r_to_f(alg, r);
  } catch (const std::invalid_argument& e) {
    rep.notes = std::string("left legs do not lie in the algebra: ") + e.what();
    return rep;
  }
  const FEquationsReport fe = f_equations_check(alg, f);
  rep.f_unitarity = fe.f_unitarity;
  rep.f_ybe_failures = fe.f_ybe_failures;
  if (with_cayley) {
    if (rep.f_unitarity)
      rep.cayley = cayley_check(alg, f);
    else
      rep.notes = "Cayley criteria skipped: f + f^* != 1";
  }
  return rep;
}

}  // namespace superbd
