#include <gtest/gtest.h>

#include "oracle.hpp"
#include "superbd/superbd.hpp"

using namespace superbd;

TEST(SuperAlgebra, DimensionsAndNames) {
  EXPECT_EQ(SuperAlgebra(Kind::gl, 2, 1).dim(), 9u);
  EXPECT_EQ(SuperAlgebra(Kind::sl, 2, 1).dim(), 8u);
  EXPECT_EQ(SuperAlgebra(Kind::sl, 3, 1).dim(), 15u);
  EXPECT_EQ(SuperAlgebra(Kind::sl, 2, 1).cartan_dim(), 2u);
  EXPECT_EQ(SuperAlgebra(Kind::sl, 2, 1).name(), "sl(2,1)");
  EXPECT_THROW(SuperAlgebra(Kind::sl, 2, 2), std::invalid_argument);
  EXPECT_THROW(SuperAlgebra(Kind::gl, 0, 1), std::invalid_argument);
}

TEST(SuperAlgebra, ParseAlgebra) {
  EXPECT_EQ(parse_algebra("gl:3:1"), SuperAlgebra(Kind::gl, 3, 1));
  EXPECT_THROW(parse_algebra("sl:2"), std::invalid_argument);
  EXPECT_THROW(parse_algebra("so:2:1"), std::invalid_argument);
  EXPECT_THROW(parse_algebra("sl:2x:1"), std::invalid_argument);
  EXPECT_THROW(parse_algebra("sl:1:1"), std::invalid_argument);
}

TEST(SuperAlgebra, CartanBasisOfSl21) {
  const SuperAlgebra alg(Kind::sl, 2, 1);
  const auto h = alg.cartan_basis();
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0], E(1, 1) - E(2, 2));
  EXPECT_EQ(h[1], E(2, 2) + E(3, 3));
}

TEST(SuperAlgebra, DualOfElementaryMatrix) {
  const SuperAlgebra alg(Kind::gl, 2, 1);
  EXPECT_EQ(alg.dual({1, 3}), E(3, 1));
  EXPECT_EQ(alg.dual({3, 1}), E(1, 3, -1));
  EXPECT_EQ(alg.dual({3, 3}), E(3, 3, -1));
}

TEST(SuperAlgebra, CoordinatesRoundTrip) {
  std::mt19937 rng(1);
  for (const auto& alg : oracle::small_algebras())
    for (int trial = 0; trial < 5; ++trial) {
      const AlgebraElement x = oracle::random_element(alg, rng);
      EXPECT_EQ(alg.element(alg.coordinates(x)), x) << alg.name();
    }
  const SuperAlgebra sl(Kind::sl, 2, 1);
  EXPECT_THROW(sl.coordinates(E(1, 1)), std::invalid_argument);
  EXPECT_FALSE(sl.contains(E(1, 1)));
  EXPECT_TRUE(sl.contains(E(1, 1) + E(3, 3)));
}

TEST(SuperAlgebra, CasimirMatchesDirectFormula) {
  for (const auto& alg : oracle::small_algebras())
    EXPECT_EQ(alg.casimir(), oracle::casimir(alg.grading(), alg.kind() == Kind::sl)) << alg.name();
}

TEST(SuperAlgebra, CasimirOfSl21CartanPart) {
  // Cartan part of Omega for sl(2,1) in the basis A = E11 + E33, h2 = E22 + E33.
  const SuperAlgebra alg(Kind::sl, 2, 1);
  const AlgebraElement a = E(1, 1) + E(3, 3), h2 = E(2, 2) + E(3, 3);
  const Tensor2 expected = tensor(a, -h2) + tensor(-h2, a);
  Tensor2 cartan;
  for (const auto& [k, c] : alg.casimir())
    if (k[0].i == k[0].j && k[1].i == k[1].j) cartan.add(k, c);
  EXPECT_EQ(cartan, expected);
}

class AlgebraProperties : public ::testing::TestWithParam<std::size_t> {
 protected:
  SuperAlgebra alg() const { return oracle::small_algebras()[GetParam()]; }
};

TEST_P(AlgebraProperties, SuperJacobiOnBasis) {
  const SuperAlgebra a = alg();
  const auto& b = a.basis();
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      const AlgebraElement xy = a.bracket(b[x], b[y]);
      for (std::size_t z = 0; z < b.size(); ++z) {
        const AlgebraElement lhs = a.bracket(b[x], a.bracket(b[y], b[z]));
        AlgebraElement rhs = a.bracket(xy, b[z]);
        const AlgebraElement swapped = a.bracket(b[y], a.bracket(b[x], b[z]));
        rhs += a.parity(x) * a.parity(y) ? -swapped : swapped;
        ASSERT_EQ(lhs, rhs) << a.name() << " " << x << " " << y << " " << z;
      }
    }
}

TEST_P(AlgebraProperties, FormInvariantSupersymmetricConsistent) {
  const SuperAlgebra a = alg();
  const auto& b = a.basis();
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      const Rational xy = a.form(b[x], b[y]);
      const Rational yx = a.form(b[y], b[x]);
      EXPECT_EQ(xy, a.parity(x) * a.parity(y) ? Rational(-yx) : yx);
      if (a.parity(x) != a.parity(y)) EXPECT_TRUE(is_zero(xy));
      for (std::size_t z = 0; z < b.size(); ++z)
        ASSERT_EQ(a.form(a.bracket(b[x], b[y]), b[z]), a.form(b[x], a.bracket(b[y], b[z])));
    }
}

TEST_P(AlgebraProperties, DualBasisPairingAndInvolution) {
  const SuperAlgebra a = alg();
  const auto& b = a.basis();
  const auto& d = a.dual_basis();
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) EXPECT_EQ(a.form(b[y], d[x]), Rational(x == y ? 1 : 0));
  const auto dd = dual_basis(d, a.grading());
  for (std::size_t x = 0; x < b.size(); ++x) EXPECT_EQ(dd[x], a.parity(x) ? -b[x] : b[x]);
}

TEST_P(AlgebraProperties, CasimirFlipAndAdInvariant) {
  const SuperAlgebra a = alg();
  const Grading& g = a.grading();
  const Tensor2 omega = a.casimir();
  EXPECT_EQ(graded_flip(omega, g), omega);
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const AlgebraElement& bx = a.basis()[x];
    Tensor2 ad;
    for (const auto& [k, c] : omega) {
      const AlgebraElement l = E(k[0].i, k[0].j), r = E(k[1].i, k[1].j);
      ad += tensor(a.bracket(bx, l), r) * c;
      const Tensor2 second = tensor(l, a.bracket(bx, r)) * c;
      ad += a.parity(x) * g.parity(k[0]) ? -second : second;
    }
    EXPECT_TRUE(ad.is_zero()) << a.name() << " basis " << x;
  }
}

INSTANTIATE_TEST_SUITE_P(SmallAlgebras, AlgebraProperties,
                         ::testing::Range<std::size_t>(0, oracle::small_algebras().size()),
                         [](const auto& info) {
                           const auto a = oracle::small_algebras()[info.param];
                           return to_string(a.kind()) + std::to_string(a.m()) + "_" + std::to_string(a.n());
                         });
