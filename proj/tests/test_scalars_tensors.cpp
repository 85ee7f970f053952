#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "superbd/superbd.hpp"

using namespace superbd;

TEST(Rational, ReducesAndCompares) {
  EXPECT_EQ(make_rational(6, -4), Rational(-3, 2));
  EXPECT_TRUE(is_zero(make_rational(0, 5)));
  EXPECT_FALSE(is_zero(Vector{0, Rational(1, 7)}));
  EXPECT_EQ(to_string(make_rational(-3, 6)), "-1/2");
}

TEST(Matrix, RrefRankNullspace) {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  EXPECT_EQ(rank(a), 2u);
  const auto ns = nullspace(a);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(is_zero(a * ns[0]));
  EXPECT_FALSE(is_zero(ns[0]));
  EXPECT_EQ(rref(a).pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Matrix, SolveInverseDeterminant) {
  const Matrix a = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
  EXPECT_EQ(determinant(a), Rational(1));
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, Matrix::identity(2));
  auto x = solve(a, {3, 2});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Vector{1, 1}));

  const Matrix singular = Matrix::from_rows({{1, 2}, {2, 4}}, 2);
  EXPECT_EQ(determinant(singular), Rational(0));
  EXPECT_FALSE(inverse(singular));
  EXPECT_FALSE(solve(singular, {1, 0}));
  auto particular = solve(singular, {1, 2});
  ASSERT_TRUE(particular);
  EXPECT_EQ(*particular, (Vector{1, 0}));
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = oracle::random_rational(rng);
    const Rational expected = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                              a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                              a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    EXPECT_EQ(determinant(a), expected);
  }
}

TEST(Spans, ContainmentAndComplement) {
  const std::vector<Vector> s = {{1, 0, 1}, {0, 1, 1}};
  EXPECT_TRUE(span_contains(s, {1, 1, 2}));
  EXPECT_FALSE(span_contains(s, {0, 0, 1}));
  EXPECT_EQ(span_dimension({{1, 0, 1}, {2, 0, 2}}, 3), 1u);
  EXPECT_TRUE(same_span(s, {{1, 1, 2}, {1, -1, 0}}, 3));
  const auto perp = orthogonal_complement(s, Matrix::identity(3));
  ASSERT_EQ(perp.size(), 1u);
  EXPECT_TRUE(same_span(perp, {{1, 1, -1}}, 3));
  EXPECT_EQ(image(Matrix::from_columns({{1, 1, 0}, {2, 2, 0}}, 3)).size(), 1u);
}

TEST(SparseCombination, DropsZerosAndCompares) {
  AlgebraElement x = E(1, 2) + E(2, 1, 3);
  x -= E(1, 2);
  EXPECT_EQ(x.size(), 1u);
  EXPECT_EQ(x, E(2, 1, 3));
  EXPECT_TRUE((x * Rational(0)).is_zero());
  EXPECT_EQ(-x + x, AlgebraElement{});
}

TEST(Grading, Parities) {
  const Grading g{2, 1};
  EXPECT_EQ(g.line_parity(2), 0);
  EXPECT_EQ(g.line_parity(3), 1);
  EXPECT_EQ(g.parity({1, 3}), 1);
  EXPECT_EQ(g.parity({3, 3}), 0);
  EXPECT_EQ(parity_of(E(3, 1) + E(2, 3), g), 1);
  EXPECT_THROW(parity_of(E(1, 2) + E(1, 3), g), std::invalid_argument);
}

TEST(Supercommutator, MatchesDenseOracle) {
  std::mt19937 rng(11);
  for (const auto& alg : oracle::small_algebras()) {
    const Grading& g = alg.grading();
    for (int trial = 0; trial < 10; ++trial) {
      const int px = int(rng() % 2), py = int(rng() % 2);
      const AlgebraElement x = oracle::random_element(alg, rng, px), y = oracle::random_element(alg, rng, py);
      const auto dense = oracle::dense_bracket(oracle::to_dense(x, g.size()), px, oracle::to_dense(y, g.size()), py);
      EXPECT_EQ(supercommutator(x, y, g), oracle::from_dense(dense)) << alg.name();
      EXPECT_EQ(supertrace_form(x, y, g),
                oracle::dense_form(g, oracle::to_dense(x, g.size()), oracle::to_dense(y, g.size())));
    }
  }
}

TEST(Supercommutator, OddOddIsAnticommutator) {
  const Grading g{1, 1};
  EXPECT_EQ(supercommutator(E(1, 2), E(2, 1), g), E(1, 1) + E(2, 2));
  EXPECT_EQ(supercommutator(E(1, 1), E(1, 2), g), E(1, 2));
}

TEST(GradedFlip, IsAnInvolutionWithSigns) {
  const Grading g{2, 1};
  EXPECT_EQ(graded_flip(tensor(E(1, 3), E(3, 2)), g), -tensor(E(3, 2), E(1, 3)));
  EXPECT_EQ(graded_flip(tensor(E(1, 2), E(3, 2)), g), tensor(E(3, 2), E(1, 2)));
  std::mt19937 rng(5);
  const SuperAlgebra alg(Kind::gl, 2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor2 t = oracle::random_tensor(alg, rng, 3);
    EXPECT_EQ(graded_flip(graded_flip(t, g), g), t);
  }
}

TEST(EmbeddedBracket, MatchesKoszulProductOracle) {
  std::mt19937 rng(3);
  for (const auto& alg : oracle::small_algebras()) {
    const Grading& g = alg.grading();
    for (int trial = 0; trial < 3; ++trial) {
      const Tensor2 r = oracle::random_tensor(alg, rng, 2);
      const Tensor3 r12_13 = bracket(embed(r, Legs::L12), embed(r, Legs::L13), g);
      const Tensor3 r12_23 = bracket(embed(r, Legs::L12), embed(r, Legs::L23), g);
      const Tensor3 r13_23 = bracket(embed(r, Legs::L13), embed(r, Legs::L23), g);
      EXPECT_EQ(r12_13, oracle::graded_commutator(g, oracle::place(g, r, 0, 1), oracle::place(g, r, 0, 2)))
          << alg.name();
      EXPECT_EQ(r12_23, oracle::graded_commutator(g, oracle::place(g, r, 0, 1), oracle::place(g, r, 1, 2)))
          << alg.name();
      EXPECT_EQ(r13_23, oracle::graded_commutator(g, oracle::place(g, r, 0, 2), oracle::place(g, r, 1, 2)))
          << alg.name();
    }
  }
}

TEST(EmbeddedBracket, RejectsOtherSlotPairs) {
  const Grading g{1, 1};
  const Tensor2 r = tensor(E(1, 2), E(2, 1));
  EXPECT_THROW(bracket(embed(r, Legs::L23), embed(r, Legs::L12), g), std::invalid_argument);
}
