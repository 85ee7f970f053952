// superbd: enumerate diagrams and triples, construct and verify r-matrices.
//
// Exit status: 0 success, 1 malformed input, 2 verification failure.

#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reference_sl21.hpp"
#include "superbd/superbd.hpp"

using namespace superbd;

namespace {

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kFailed = 2;

struct Options {
  std::string algebra;
  std::size_t diagram = 0;
  std::size_t triple = 0;
  std::string r0 = "particular";
  std::string format;
  std::string input;
};

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool want_json(const Options& o, bool json_default) {
  if (o.format.empty()) return json_default;
  return o.format == "json";
}

SuperAlgebra require_algebra(const Options& o) {
  if (o.algebra.empty()) throw MalformedInput("--algebra kind:m:n is required");
  try {
    return parse_algebra(o.algebra);
  } catch (const std::exception& e) {
    throw MalformedInput(e.what());
  }
}

DynkinDiagram pick_diagram(const SuperAlgebra& alg, std::size_t k) {
  const auto ds = enumerate_diagrams(alg);
  if (k >= ds.size())
    throw MalformedInput("diagram index " + std::to_string(k) + " out of range (" + std::to_string(ds.size()) +
                         " diagrams)");
  return ds[k];
}

AdmissibleTriple pick_triple(const DynkinDiagram& d, std::size_t k) {
  const auto ts = enumerate_triples(d);
  if (k >= ts.size())
    throw MalformedInput("triple index " + std::to_string(k) + " out of range (" + std::to_string(ts.size()) +
                         " triples)");
  return ts[k];
}

json read_json(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

Tensor2 non_cartan_part(const Tensor2& r) {
  Tensor2 out;
  for (const auto& [k, c] : r)
    if (k[0].i != k[0].j || k[1].i != k[1].j) out.add(k, c);
  return out;
}

int cmd_diagrams(const Options& o) {
  const SuperAlgebra alg = require_algebra(o);
  const auto ds = enumerate_diagrams(alg);
  if (want_json(o, false)) {
    json out = json::array();
    for (std::size_t k = 0; k < ds.size(); ++k) {
      json d = to_json(ds[k]);
      d["index"] = k;
      out.push_back(d);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << ds.size() << " diagrams for " << alg.name() << "\n";
    for (std::size_t k = 0; k < ds.size(); ++k) std::cout << "  [" << k << "] " << format_diagram(ds[k]) << "\n";
  }
  return kOk;
}

int cmd_triples(const Options& o) {
  const SuperAlgebra alg = require_algebra(o);
  const DynkinDiagram d = pick_diagram(alg, o.diagram);
  const auto ts = enumerate_triples(d);
  if (want_json(o, false)) {
    json out = json::array();
    for (std::size_t k = 0; k < ts.size(); ++k) {
      json t = to_json(ts[k]);
      t["index"] = k;
      out.push_back(t);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << ts.size() << " admissible triples on diagram " << o.diagram << " (" << format_diagram(d) << ")\n";
    for (std::size_t k = 0; k < ts.size(); ++k) std::cout << "  [" << k << "] " << format_triple(ts[k]) << "\n";
  }
  return kOk;
}

RMatrix build_requested(const SuperAlgebra& alg, const AdmissibleTriple& t, const std::string& mode) {
  const R0Solution family = solve_r0(alg, t);
  std::vector<Rational> coeffs(family.nullspace.size());
  if (mode == "particular") return assemble_r(alg, t, coeffs);
  if (mode.rfind("gen:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(mode.substr(4));
    } catch (const std::exception&) {
      throw MalformedInput("bad --r0 '" + mode + "'");
    }
    if (k >= coeffs.size())
      throw MalformedInput("r0 generator " + std::to_string(k) + " out of range (" + std::to_string(coeffs.size()) +
                           " generators)");
    coeffs[k] = 1;
    return assemble_r(alg, t, coeffs);
  }
  if (mode.rfind("file:", 0) == 0) {
    try {
      return assemble_r(alg, t, tensor_from_json(read_json(mode.substr(5))));
    } catch (const std::invalid_argument& e) {
      throw MalformedInput(e.what());
    }
  }
  throw MalformedInput("--r0 must be particular, gen:K or file:PATH");
}

int cmd_construct(const Options& o) {
  const SuperAlgebra alg = require_algebra(o);
  const DynkinDiagram d = pick_diagram(alg, o.diagram);
  const AdmissibleTriple t = pick_triple(d, o.triple);
  const RMatrix r = build_requested(alg, t, o.r0);
  if (want_json(o, true)) {
    std::cout << to_json(alg, r, o.diagram, o.triple).dump(2) << "\n";
  } else {
    std::cout << "algebra " << alg.name() << ", diagram " << o.diagram << ", triple " << o.triple << " ("
              << format_triple(t) << ")\n";
    std::cout << "r = " << format_tensor(r.tensor) << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const json in = read_json(o.input);
  std::optional<SuperAlgebra> alg;
  try {
    if (!o.algebra.empty())
      alg = parse_algebra(o.algebra);
    else if (in.contains("provenance") && in["provenance"].contains("algebra"))
      alg = algebra_from_json(in["provenance"]["algebra"]);
  } catch (const std::exception& e) {
    throw MalformedInput(e.what());
  }
  if (!alg) throw MalformedInput("no algebra: pass --algebra or include provenance.algebra");
  Tensor2 r;
  try {
    r = tensor_from_json(in);
    for (const auto& [k, c] : r)
      for (const auto& b : k)
        if (b.i < 1 || b.j < 1 || b.i > alg->size() || b.j > alg->size())
          throw std::invalid_argument("matrix index outside " + alg->name());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
  const VerificationReport rep = verify_r_matrix(*alg, r);
  if (want_json(o, true))
    std::cout << to_json(rep).dump(2) << "\n";
  else
    std::cout << format_report(rep);
  return rep.ok() ? kOk : kFailed;
}

int cmd_reproduce(const Options& o) {
  const SuperAlgebra alg(Kind::sl, 2, 1);
  const auto ds = enumerate_diagrams(alg);
  json rows = json::array();
  bool all = true;
  auto row = [&](const std::string& name, bool ok, const std::string& detail) {
    rows.push_back({{"check", name}, {"pass", ok}, {"detail", detail}});
    all = all && ok;
  };

  row("six diagrams", ds.size() == 6, std::to_string(ds.size()) + " found");
  if (ds.size() != 6) {
    std::cout << rows.dump(2) << "\n";
    return kFailed;
  }
  auto reflects_to = [&](std::size_t from, std::size_t to) {
    for (const auto& a : ds[from].simple_roots)
      if (a.parity && odd_reflection(ds[from], a) == ds[to]) return true;
    return false;
  };
  for (auto [a, b] : std::array<std::pair<std::size_t, std::size_t>, 4>{{{0, 1}, {1, 2}, {3, 4}, {4, 5}}})
    row("odd reflection D" + std::to_string(a + 1) + " -> D" + std::to_string(b + 1), reflects_to(a, b), "");

  auto verify_family = [&](const AdmissibleTriple& t) {
    const R0Solution family = solve_r0(alg, t);
    for (std::size_t k = 0; k <= family.nullspace.size(); ++k) {
      std::vector<Rational> c(family.nullspace.size());
      if (k) c[k - 1] = 1;
      const Tensor2 r = assemble_r(alg, t, c).tensor;
      if (!cybe_residual(alg, r).is_zero() || !unitarity_residual(alg, r).is_zero()) return false;
      if (!r0_equations_check(alg, t, family.r0(c)).ok()) return false;
    }
    return true;
  };

  const auto tails = reference::standard_tails();
  for (std::size_t k = 0; k < 6; ++k) {
    const AdmissibleTriple t = enumerate_triples(ds[k]).front();
    const Tensor2 r = assemble_r(alg, t, std::vector<Rational>(solve_r0(alg, t).nullspace.size())).tensor;
    const Tensor2 tail = non_cartan_part(r);
    row("standard D" + std::to_string(k + 1), tail == tails[k] && verify_family(t), format_tensor(tail));
  }

  for (const auto& ns : reference::nonstandard()) {
    const DynkinDiagram& d = ds[ns.diagram];
    std::optional<AdmissibleTriple> found;
    for (const auto& t : enumerate_triples(d))
      if (t.tau.size() == 1 && d.simple_roots[t.tau[0].first] == ns.source &&
          d.simple_roots[t.tau[0].second] == ns.target)
        found = t;
    if (!found) {
      row(std::string("nonstandard ") + ns.name, false, "triple not enumerated");
      continue;
    }
    const Tensor2 r = assemble_r(alg, *found, std::vector<Rational>(solve_r0(alg, *found).nullspace.size())).tensor;
    const Tensor2 extra = non_cartan_part(r) - tails[ns.diagram];
    row(std::string("nonstandard ") + ns.name, extra == ns.extra && verify_family(*found), format_tensor(extra));
  }

  const LinearOperator f = reference::exotic_f(alg);
  const Tensor2 rf = f_to_r(alg, f);
  const Matrix fm1 = f.matrix - Matrix::identity(alg.dim());
  row("exotic f: operator equations", f_equations_check(alg, f).ok(), "");
  row("exotic f: (f (x) 1) Omega matches table", rf == reference::exotic_r(), format_tensor(rf));
  row("exotic f: CYBE and unitarity", cybe_residual(alg, rf).is_zero() && unitarity_residual(alg, rf).is_zero(), "");
  row("exotic f: Cayley transform", cayley_check(alg, f).ok(), "");
  row("exotic f: det f = det(f-1) = 0", is_zero(determinant(f.matrix)) && is_zero(determinant(fm1)), "");

  if (want_json(o, false)) {
    std::cout << json{{"pass", all}, {"checks", rows}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << (r["pass"].get<bool>() ? "PASS  " : "FAIL  ") << r["check"].get<std::string>();
      const auto detail = r["detail"].get<std::string>();
      if (!detail.empty()) std::cout << "  [" << detail << "]";
      std::cout << "\n";
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical r-matrices on gl(m|n) and sl(m|n) from admissible triples"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto* diagrams = app.add_subcommand("diagrams", "list the Dynkin diagrams");
  diagrams->add_option("--algebra", o.algebra, "kind:m:n, e.g. sl:2:1")->required();
  add_format(diagrams);

  auto* triples = app.add_subcommand("triples", "list admissible triples of a diagram");
  triples->add_option("--algebra", o.algebra, "kind:m:n")->required();
  triples->add_option("--diagram", o.diagram, "0-based diagram index");
  add_format(triples);

  auto* construct = app.add_subcommand("construct", "build the r-matrix of a triple");
  construct->add_option("--algebra", o.algebra, "kind:m:n")->required();
  construct->add_option("--diagram", o.diagram, "0-based diagram index");
  construct->add_option("--triple", o.triple, "0-based triple index");
  construct->add_option("--r0", o.r0, "particular | gen:K | file:PATH");
  add_format(construct);

  auto* verify = app.add_subcommand("verify", "check an r-matrix given as JSON");
  verify->add_option("--algebra", o.algebra, "kind:m:n (default: provenance.algebra)");
  verify->add_option("input", o.input, "JSON file (default: standard input)");
  add_format(verify);

  auto* reproduce = app.add_subcommand("reproduce-sl21", "rebuild the reference sl(2,1) tables");
  add_format(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*diagrams) return cmd_diagrams(o);
    if (*triples) return cmd_triples(o);
    if (*construct) return cmd_construct(o);
    if (*verify) return cmd_verify(o);
    if (*reproduce) return cmd_reproduce(o);
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
