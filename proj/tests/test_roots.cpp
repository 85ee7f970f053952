#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "superbd/superbd.hpp"

using namespace superbd;

namespace {

std::set<Root> roots_of(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Roots, LineRootsAndParity) {
  const Grading g{2, 1};
  const Root a = line_root(2, 3, g);
  EXPECT_EQ(a.weight, (std::vector<int>{0, 1, -1}));
  EXPECT_EQ(a.parity, 1);
  EXPECT_EQ(line_root(1, 2, g).parity, 0);
  EXPECT_EQ(root_lines(-a), (std::pair<int, int>{3, 2}));
  EXPECT_FALSE(is_root(add(line_root(1, 2, g), line_root(1, 3, g), g)));
  EXPECT_EQ(all_roots(g).size(), 6u);
  EXPECT_EQ(root_name(a, g), "e2-d1");
}

TEST(Roots, FormOnWeights) {
  const Grading g{2, 1};
  EXPECT_EQ(root_form(line_root(2, 3, g), line_root(2, 3, g), g), Rational(0));
  EXPECT_EQ(root_form(line_root(1, 2, g), line_root(1, 2, g), g), Rational(2));
  EXPECT_EQ(root_form(line_root(1, 2, g), line_root(2, 3, g), g), Rational(-1));
}

TEST(Diagrams, CountsAndOrder) {
  EXPECT_EQ(enumerate_diagrams(Grading{2, 1}).size(), 6u);
  EXPECT_EQ(enumerate_diagrams(Grading{3, 1}).size(), 8u);
  EXPECT_EQ(enumerate_diagrams(Grading{2, 2}).size(), 12u);
  EXPECT_EQ(enumerate_diagrams(Grading{1, 1}).size(), 2u);

  const auto ds = enumerate_diagrams(Grading{2, 1});
  const std::vector<std::vector<int>> orders = {{1, 2, 3}, {1, 3, 2}, {3, 1, 2}};
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_EQ(ds[k].order, orders[k % 3]);
    EXPECT_EQ(ds[k].sign, k < 3 ? 1 : -1);
  }
}

TEST(Diagrams, SimpleRootsOfSl21) {
  const Grading g{2, 1};
  const auto ds = enumerate_diagrams(g);
  EXPECT_EQ(roots_of(ds[0].simple_roots), roots_of({line_root(1, 2, g), line_root(2, 3, g)}));
  EXPECT_EQ(roots_of(ds[1].simple_roots), roots_of({line_root(1, 3, g), line_root(3, 2, g)}));
  EXPECT_EQ(roots_of(ds[2].simple_roots), roots_of({line_root(3, 1, g), line_root(1, 2, g)}));
  EXPECT_EQ(roots_of(ds[4].simple_roots), roots_of({line_root(3, 1, g), line_root(2, 3, g)}));
}

TEST(Diagrams, FromSimpleRootsRecoversDiagram) {
  for (const Grading g : {Grading{2, 1}, Grading{3, 1}, Grading{2, 2}})
    for (const auto& d : enumerate_diagrams(g)) {
      const DynkinDiagram back = diagram_from_simple_roots(g, d.simple_roots);
      EXPECT_EQ(back, d);
      EXPECT_EQ(back.order, d.order);
      EXPECT_EQ(back.sign, d.sign);
    }
}

TEST(Diagrams, RejectsBadOrders) {
  const Grading g{2, 1};
  EXPECT_THROW(diagram_from_order(g, {1, 1, 2}, 1), std::invalid_argument);
  EXPECT_THROW(diagram_from_order(g, {1, 2}, 1), std::invalid_argument);
  EXPECT_FALSE(is_shuffle_word({2, 1, 3}, g));
  EXPECT_TRUE(is_shuffle_word({3, 1, 2}, g));
}

TEST(OddReflection, ChainsOfSl21) {
  const Grading g{2, 1};
  const auto ds = enumerate_diagrams(g);
  EXPECT_EQ(odd_reflection(ds[0], line_root(2, 3, g)), ds[1]);
  EXPECT_EQ(odd_reflection(ds[1], line_root(1, 3, g)), ds[2]);
  EXPECT_EQ(odd_reflection(ds[1], line_root(3, 2, g)), ds[0]);
  EXPECT_EQ(odd_reflection(ds[3], line_root(3, 2, g)), ds[4]);
  EXPECT_EQ(odd_reflection(ds[4], line_root(3, 1, g)), ds[5]);
  EXPECT_THROW(odd_reflection(ds[0], line_root(1, 2, g)), std::invalid_argument);
  EXPECT_THROW(odd_reflection(ds[0], line_root(1, 3, g)), std::invalid_argument);
}

TEST(OddReflection, IsAnInvolution) {
  for (const Grading g : {Grading{2, 1}, Grading{3, 1}, Grading{2, 2}})
    for (const auto& d : enumerate_diagrams(g))
      for (const auto& a : d.simple_roots)
        if (a.parity) EXPECT_EQ(odd_reflection(odd_reflection(d, a), -a), d);
}

TEST(PositiveRoots, CountsAndCoordinates) {
  for (const Grading g : {Grading{2, 1}, Grading{3, 1}, Grading{2, 2}})
    for (const auto& d : enumerate_diagrams(g)) {
      const auto pos = positive_roots(d);
      const std::size_t n = static_cast<std::size_t>(g.size());
      EXPECT_EQ(pos.size(), n * (n - 1) / 2);
      for (const auto& r : all_roots(g)) EXPECT_NE(is_positive(d, r), is_positive(d, -r));
      for (const auto& a : pos) {
        const auto c = simple_coordinates(d, a);
        ASSERT_TRUE(c);
        for (int x : *c) EXPECT_GE(x, 0);
      }
    }
}

TEST(RootVectors, DefaultPairsAreNormalized) {
  const SuperAlgebra alg(Kind::gl, 2, 2);
  for (const auto& d : enumerate_diagrams(alg))
    for (const auto& a : positive_roots(d)) {
      const auto p = root_vector_pair(d, a);
      EXPECT_EQ(alg.form(p.positive, p.negative), Rational(1));
      EXPECT_THROW(root_vector_pair(d, -a), std::invalid_argument);
    }
}

TEST(Coroots, CartanVectorRepresentsRoot) {
  for (const auto& alg : oracle::small_algebras()) {
    const Grading& g = alg.grading();
    for (const auto& a : all_roots(g)) {
      const AlgebraElement h = cartan_vector(g, a);
      EXPECT_TRUE(alg.contains(h));
      for (const auto& x : alg.cartan_basis()) EXPECT_EQ(alg.form(h, x), evaluate_root(a, x));
    }
  }
  const Grading g{2, 1};
  EXPECT_EQ(cartan_vector(g, line_root(2, 3, g)), E(2, 2) + E(3, 3));
}

TEST(Coroots, Omega0IsCartanPartOfCasimir) {
  for (const auto& alg : oracle::small_algebras())
    for (const auto& d : enumerate_diagrams(alg)) {
      Tensor2 cartan;
      for (const auto& [k, c] : alg.casimir())
        if (k[0].i == k[0].j && k[1].i == k[1].j) cartan.add(k, c);
      EXPECT_EQ(omega0(alg, d), cartan) << alg.name();
    }
}
