#pragma once

// Reference sl(2,1) tables used by `superbd reproduce-sl21`.

#include <vector>

#include "superbd/superbd.hpp"

namespace superbd::reference {

inline Tensor2 t(int a, int b, int c, int d, const Rational& coeff = 1) { return tensor(E(a, b), E(c, d)) * coeff; }

/// Non-Cartan part of the standard r-matrix of each of the six diagrams.
inline std::vector<Tensor2> standard_tails() {
  return {
      t(2, 1, 1, 2) + t(3, 2, 2, 3) + t(3, 1, 1, 3),
      t(2, 1, 1, 2) - t(2, 3, 3, 2) + t(3, 1, 1, 3),
      t(2, 1, 1, 2) - t(2, 3, 3, 2) - t(1, 3, 3, 1),
      t(1, 2, 2, 1) - t(2, 3, 3, 2) - t(1, 3, 3, 1),
      t(1, 2, 2, 1) + t(3, 2, 2, 3) - t(1, 3, 3, 1),
      t(1, 2, 2, 1) + t(3, 2, 2, 3) + t(3, 1, 1, 3),
  };
}

struct Nonstandard {
  const char* name;
  std::size_t diagram;    // 0-based position among the six diagrams
  Root source, target;    // tau(source) = target
  Tensor2 extra;          // added to the standard tail of the diagram
};

inline std::vector<Nonstandard> nonstandard() {
  const Grading g{2, 1};
  return {
      {"ns1", 1, line_root(1, 3, g), line_root(3, 2, g), t(3, 1, 3, 2) + t(3, 2, 3, 1)},
      {"ns2", 4, line_root(2, 3, g), line_root(3, 1, g), t(3, 2, 3, 1) + t(3, 1, 3, 2)},
      {"ns3", 1, line_root(3, 2, g), line_root(1, 3, g), -t(2, 3, 1, 3) - t(1, 3, 2, 3)},
      {"ns4", 4, line_root(3, 1, g), line_root(2, 3, g), -t(1, 3, 2, 3) - t(2, 3, 1, 3)},
  };
}

/// The exotic operator on sl(2,1) given by its values on a basis.
inline LinearOperator exotic_f(const SuperAlgebra& alg) {
  const AlgebraElement a = E(1, 1) + E(3, 3), h2 = E(2, 2) + E(3, 3);
  const std::vector<AlgebraElement> domain = {a, h2, E(2, 1), E(1, 2), E(2, 3), E(1, 3), E(3, 1), E(3, 2)};
  const std::vector<AlgebraElement> images = {{}, h2, {}, E(1, 2), {}, E(1, 3), E(1, 3, -1), E(2, 3) + E(3, 2)};
  return from_images(alg, domain, images);
}

inline Tensor2 exotic_r0() { return tensor(E(2, 2, -1) + E(3, 3, -1), E(1, 1) + E(3, 3)); }

inline Tensor2 exotic_r() {
  return exotic_r0() + t(1, 2, 2, 1) - t(1, 3, 3, 1) + t(3, 2, 2, 3) - t(1, 3, 1, 3) + t(2, 3, 2, 3);
}

}  // namespace superbd::reference
