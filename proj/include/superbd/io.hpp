#pragma once

// JSON and plain-text renderings. Matrix indices in payloads are 1-based.

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superbd/construct.hpp"
#include "superbd/rational.hpp"
#include "superbd/roots.hpp"
#include "superbd/superalgebra.hpp"
#include "superbd/tensor.hpp"
#include "superbd/triples.hpp"
#include "superbd/verify.hpp"

namespace superbd {

using json = nlohmann::json;

namespace detail {

inline json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

inline mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not an integer: " + j.dump());
    return z;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline json index_to_json(const BasisIndex& b) { return json::array({b.i, b.j}); }

inline BasisIndex index_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument("expected a matrix index [i, j], got " + j.dump());
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace detail

/// [num, den] with den > 0.
inline json rational_to_json(const Rational& q) {
  return json::array({detail::integer_to_json(q.get_num()), detail::integer_to_json(q.get_den())});
}

inline Rational rational_from_json(const json& num, const json& den) {
  const mpz_class d = detail::integer_from_json(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  return make_rational(detail::integer_from_json(num), d);
}

inline Rational rational_from_json(const json& pair) {
  if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("expected [num, den], got " + pair.dump());
  return rational_from_json(pair[0], pair[1]);
}

inline json to_json(const AlgebraElement& x) {
  json coeffs = json::array();
  for (const auto& [b, c] : x)
    coeffs.push_back({detail::index_to_json(b), detail::integer_to_json(c.get_num()), detail::integer_to_json(c.get_den())});
  return {{"coeffs", coeffs}};
}

inline AlgebraElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("element JSON needs a \"coeffs\" array");
  AlgebraElement x;
  for (const auto& e : j["coeffs"]) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("bad element entry " + e.dump());
    x.add(detail::index_from_json(e[0]), rational_from_json(e[1], e[2]));
  }
  return x;
}

inline json to_json(const Tensor2& t) {
  json entries = json::array();
  for (const auto& [k, c] : t)
    entries.push_back({detail::index_to_json(k[0]), detail::index_to_json(k[1]), detail::integer_to_json(c.get_num()),
                       detail::integer_to_json(c.get_den())});
  return {{"entries", entries}};
}

inline Tensor2 tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw std::invalid_argument("tensor JSON needs an \"entries\" array");
  Tensor2 t;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("bad tensor entry " + e.dump());
    t.add({detail::index_from_json(e[0]), detail::index_from_json(e[1])}, rational_from_json(e[2], e[3]));
  }
  return t;
}

inline json to_json(const SuperAlgebra& alg) { return {{"kind", to_string(alg.kind())}, {"m", alg.m()}, {"n", alg.n()}}; }

inline SuperAlgebra algebra_from_json(const json& j) {
  try {
    return SuperAlgebra(parse_kind(j.at("kind").get<std::string>()), j.at("m").get<int>(), j.at("n").get<int>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad algebra JSON: ") + e.what());
  }
}

inline json to_json(const DynkinDiagram& d) {
  json roots = json::array(), names = json::array(), parities = json::array();
  for (const auto& a : d.simple_roots) {
    roots.push_back(a.weight);
    names.push_back(root_name(a, d.grading));
    parities.push_back(a.parity);
  }
  return {{"order", d.order}, {"sign", d.sign}, {"simple_roots", roots}, {"names", names}, {"parities", parities}};
}

inline json to_json(const AdmissibleTriple& t) {
  json tau = json::array();
  for (const auto& [a, b] : t.tau) tau.push_back({a, b});
  return {{"gamma1", t.gamma1}, {"gamma2", t.gamma2}, {"tau", tau}};
}

inline AdmissibleTriple triple_from_json(const DynkinDiagram& d, const json& j) {
  TauMap tau;
  try {
    for (const auto& p : j.at("tau")) tau.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad triple JSON: ") + e.what());
  }
  return make_triple(d, tau);
}

inline json to_json(const SuperAlgebra& alg, const RMatrix& r, std::size_t diagram_index, std::size_t triple_index) {
  json out = to_json(r.tensor);
  json coeffs = json::array();
  for (const auto& c : r.r0_coefficients) coeffs.push_back(rational_to_json(c));
  json diagram = to_json(r.triple.diagram);
  diagram["index"] = diagram_index;
  json triple = to_json(r.triple);
  triple["index"] = triple_index;
  out["provenance"] = {{"algebra", to_json(alg)}, {"diagram", diagram}, {"triple", triple}, {"r0_coefficients", coeffs}};
  return out;
}

inline json to_json(const CayleyReport& c) {
  return {{"subalgebras", c.subalgebras()},
          {"isomorphism", c.isomorphism()},
          {"isometry", c.isometry},
          {"kernel_is_perp", c.kernel_is_perp}};
}

inline json to_json(const VerificationReport& rep) {
  json out = {{"ok", rep.ok()},
              {"unitarity", rep.unitarity()},
              {"cybe", rep.cybe()},
              {"f_unitarity", rep.f_unitarity},
              {"f_ybe", rep.f_ybe()},
              {"cayley", rep.cayley ? to_json(*rep.cayley) : json(nullptr)},
              {"residual_norms", {rep.unitarity_residual.size(), rep.cybe_residual.size()}}};
  if (!rep.notes.empty()) out["notes"] = rep.notes;
  return out;
}

// ---- text ----

inline std::string format_index(const BasisIndex& b) {
  if (b.i < 10 && b.j < 10) return "E" + std::to_string(b.i) + std::to_string(b.j);
  return "E(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
}

namespace detail {

template <class Combination, class KeyFormatter>
std::string format_combination(const Combination& x, KeyFormatter key) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (mag != 1) os << mag.get_str() << " ";
    os << key(k);
    first = false;
  }
  return os.str();
}

}  // namespace detail

inline std::string format_element(const AlgebraElement& x) {
  return detail::format_combination(x, [](const BasisIndex& b) { return format_index(b); });
}

inline std::string format_tensor(const Tensor2& t) {
  return detail::format_combination(
      t, [](const std::array<BasisIndex, 2>& k) { return format_index(k[0]) + " (x) " + format_index(k[1]); });
}

inline std::string format_diagram(const DynkinDiagram& d) {
  std::ostringstream os;
  os << "order (";
  for (std::size_t k = 0; k < d.order.size(); ++k) os << (k ? "," : "") << d.order[k];
  os << ") sign " << (d.sign > 0 ? "+" : "-") << "  simple roots:";
  for (const auto& a : d.simple_roots) os << " " << root_name(a, d.grading) << (a.parity ? "[odd]" : "");
  return os.str();
}

inline std::string format_triple(const AdmissibleTriple& t) {
  if (t.empty()) return "empty";
  std::ostringstream os;
  for (std::size_t k = 0; k < t.tau.size(); ++k) {
    const auto& [a, b] = t.tau[k];
    os << (k ? ", " : "") << "a" << a << " -> a" << b << " (" << root_name(t.diagram.simple_roots[a], t.diagram.grading)
       << " -> " << root_name(t.diagram.simple_roots[b], t.diagram.grading) << ")";
  }
  return os.str();
}

inline std::string format_report(const VerificationReport& rep) {
  auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
  std::ostringstream os;
  os << "unitarity   " << mark(rep.unitarity()) << " (" << rep.unitarity_residual.size() << " residual terms)\n";
  os << "cybe        " << mark(rep.cybe()) << " (" << rep.cybe_residual.size() << " residual terms)\n";
  os << "f + f* = 1  " << mark(rep.f_unitarity) << "\n";
  os << "f-ybe       " << mark(rep.f_ybe()) << " (" << rep.f_ybe_failures.size() << " failing basis pairs)\n";
  if (rep.cayley) {
    os << "cayley      subalgebras " << mark(rep.cayley->subalgebras()) << ", isomorphism "
       << mark(rep.cayley->isomorphism()) << ", isometry " << mark(rep.cayley->isometry) << "\n";
  }
  if (!rep.notes.empty()) os << "note: " << rep.notes << "\n";
  os << "overall     " << mark(rep.ok()) << "\n";
  return os.str();
}

}  // namespace superbd
