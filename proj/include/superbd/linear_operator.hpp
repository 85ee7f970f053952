#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "superbd/rational.hpp"
#include "superbd/superalgebra.hpp"
#include "superbd/tensor.hpp"

namespace superbd {

/// Rational matrix of a linear map in a fixed ordered basis: column a holds
/// the coordinates of the image of basis vector a. Full-algebra operators
/// use SuperAlgebra::basis(); Cartan operators use its first cartan_dim()
/// vectors.
struct LinearOperator {
  Matrix matrix;

  static LinearOperator identity(std::size_t n) { return {Matrix::identity(n)}; }
  static LinearOperator zero(std::size_t n) { return {Matrix(n, n)}; }

  [[nodiscard]] std::size_t dim() const { return matrix.rows(); }

  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) { return {a.matrix + b.matrix}; }
  friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) { return {a.matrix - b.matrix}; }
  friend LinearOperator operator*(const Rational& c, const LinearOperator& a) { return {c * a.matrix}; }
  /// Composition: (a * b)(x) = a(b(x)).
  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) { return {a.matrix * b.matrix}; }
  friend bool operator==(const LinearOperator& a, const LinearOperator& b) { return a.matrix == b.matrix; }
};

inline AlgebraElement apply(const SuperAlgebra& alg, const LinearOperator& f, const AlgebraElement& x) {
  return alg.element(f.matrix * alg.coordinates(x));
}

/// The operator sending domain[k] to images[k]; the domain must be a basis.
inline LinearOperator from_images(const SuperAlgebra& alg, const std::vector<AlgebraElement>& domain,
                                  const std::vector<AlgebraElement>& images) {
  if (domain.size() != alg.dim() || images.size() != alg.dim())
    throw std::invalid_argument("from_images: need exactly dim() domain vectors and images");
  std::vector<Vector> xs, ys;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    xs.push_back(alg.coordinates(domain[k]));
    ys.push_back(alg.coordinates(images[k]));
  }
  auto xinv = inverse(Matrix::from_columns(xs, alg.dim()));
  if (!xinv) throw std::invalid_argument("from_images: domain vectors are not a basis");
  return {Matrix::from_columns(ys, alg.dim()) * *xinv};
}

/// f^* with (f x, y) = (x, f^* y), i.e. G^{-1} F^T G.
inline LinearOperator adjoint(const SuperAlgebra& alg, const LinearOperator& f) {
  return {alg.gram_inverse() * f.matrix.transpose() * alg.gram()};
}

inline Matrix cartan_gram(const SuperAlgebra& alg) {
  return gram_matrix(alg.cartan_basis(), alg.grading());
}

/// Adjoint of an operator on the Cartan subalgebra.
inline LinearOperator cartan_adjoint(const SuperAlgebra& alg, const LinearOperator& f0) {
  const Matrix g = cartan_gram(alg);
  return {*inverse(g) * f0.matrix.transpose() * g};
}

/// Extends a Cartan operator by zero on the root spaces.
inline LinearOperator extend_from_cartan(const SuperAlgebra& alg, const LinearOperator& f0) {
  LinearOperator f = LinearOperator::zero(alg.dim());
  for (std::size_t i = 0; i < alg.cartan_dim(); ++i)
    for (std::size_t j = 0; j < alg.cartan_dim(); ++j) f.matrix(i, j) = f0.matrix(i, j);
  return f;
}

/// True when f maps even basis vectors to even vectors and odd to odd.
inline bool is_even(const SuperAlgebra& alg, const LinearOperator& f) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      if (alg.parity(i) != alg.parity(j) && !is_zero(f.matrix(i, j))) return false;
  return true;
}

/// (f (x) 1) t. Terms are grouped by their right leg so that each left-leg
/// combination is an element of the algebra.
inline Tensor2 apply_left(const SuperAlgebra& alg, const LinearOperator& f, const Tensor2& t) {
  std::map<BasisIndex, AlgebraElement> by_right;
  for (const auto& [k, c] : t) by_right[k[1]].add(k[0], c);
  Tensor2 out;
  for (const auto& [right, left] : by_right) {
    const AlgebraElement image = apply(alg, f, left);
    for (const auto& [b, c] : image) out.add({b, right}, c);
  }
  return out;
}

}  // namespace superbd
