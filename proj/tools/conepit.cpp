// Command-line front end for the conepit library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "conepit/circuit.hpp"
#include "conepit/coeff_extract.hpp"
#include "conepit/cone_basis.hpp"
#include "conepit/diag3.hpp"
#include "conepit/error.hpp"
#include "conepit/formats.hpp"
#include "conepit/hsg.hpp"
#include "conepit/pit.hpp"
#include "json.hpp"

namespace {

using conepit::ErrorKind;
using nlohmann::json;

enum Exit { kOk = 0, kNonzero = 1, kUsage = 2, kPrecondition = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Globals {
  bool json_out = false;
  std::string field;
};

conepit::Circuit load_circuit(const std::string& path, const Globals& g) {
  const std::string text = read_file(path);
  return g.field.empty() ? conepit::parse_circuit(text) : conepit::parse_circuit(text, conepit::Field::parse(g.field));
}

json verdict_json(const conepit::PitVerdict& v) {
  json j;
  j["verdict"] = v.nonzero ? "NONZERO" : "ZERO";
  if (v.witness) j["witness"] = v.witness->to_string();
  if (v.coefficient) j["coeff"] = v.coefficient->to_string();
  j["tested"] = v.stats.monomials_tested;
  j["calls"] = v.stats.oracle_calls;
  return j;
}

int emit_verdict(const conepit::PitVerdict& v, const Globals& g) {
  if (g.json_out) {
    std::cout << verdict_json(v).dump() << "\n";
  } else {
    std::cout << v.render() << "\n";
  }
  return v.nonzero ? kNonzero : kOk;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for low-cone PIT, cone-closed bases and hitting-set constructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_option("--field", g.field, "Field spec, 'q' or 'p:<prime>' (overrides the input file's field)");

  std::string circuit_path, set_path, hsg_path, terms_path, vp_path, diag_path, poly_path, monomial, weights;
  std::uint64_t k = 0, trials = 20, seed = 0, n_arg = 0, k_arg = 0, dcap = conepit::kNoDegreeCap;
  std::size_t l = 0, dn = 0, dd = 0, block = 1;
  bool list = false;

  auto* pit = app.add_subcommand("pit", "Low-cone blackbox PIT: tests every coefficient of cone-size <= k. Exit 1 on NONZERO.");
  pit->add_option("--circuit", circuit_path, "Circuit file")->required();
  pit->add_option("--k", k, "Cone-size bound k")->required();

  auto* bfpit = app.add_subcommand("bfpit", "Brute-force PIT by dense expansion over the grid {0..d}^n. Exit 1 on NONZERO.");
  bfpit->add_option("--circuit", circuit_path, "Circuit file")->required();

  auto* szpit = app.add_subcommand("szpit", "Randomized Schwartz-Zippel PIT (seeded splitmix64 points). Exit 1 on NONZERO.");
  szpit->add_option("--circuit", circuit_path, "Circuit file")->required();
  szpit->add_option("--trials", trials, "Number of random points");
  szpit->add_option("--seed", seed, "PRNG seed");

  auto* coef = app.add_subcommand("coef", "Blackbox coefficient extraction by Vandermonde filtering.");
  coef->add_option("--circuit", circuit_path, "Circuit file")->required();
  coef->add_option("--monomial", monomial, "Monomial such as x1^2*x3, or 1")->required();

  auto* cones = app.add_subcommand("cones", "Enumerate the monomials of cone-size at most k (low cones).");
  cones->add_option("--n", n_arg, "Number of variables")->required();
  cones->add_option("--k", k_arg, "Cone-size bound")->required();
  cones->add_option("--dcap", dcap, "Total degree cap");
  cones->add_flag("--list", list, "Print every monomial");

  auto* closed = app.add_subcommand("cone-closed", "Find-Cone-Closed recursion on a monomial set; reports A and rank T_{A,B}.");
  closed->add_option("--set", set_path, "Exponent set file")->required();

  auto* annih = app.add_subcommand("annihilate", "Annihilating polynomial of a hitting-set generator tuple.");
  annih->add_option("--hsg", hsg_path, "Univariate tuple file")->required();

  auto* design = app.add_subcommand("design", "Greedy Nisan-Wigderson (l,n,d)-design.");
  design->add_option("--l", l, "Ground set size")->required();
  design->add_option("--n", dn, "Subset size")->required();
  design->add_option("--d", dd, "Intersection bound")->required();

  auto* fischer = app.add_subcommand("fischer", "Fischer's trick: products of r factors as sums of r-th powers.");
  fischer->add_option("--terms", terms_path, "Product list file")->required();

  auto* kron = app.add_subcommand("kron", "Local Kronecker map: block j's i-th variable to y_j^(2^i).");
  kron->add_option("--circuit", circuit_path, "Circuit file")->required();
  kron->add_option("--block", block, "Block size beta")->required();

  auto* shift = app.add_subcommand("shift-basis", "Cone-closed basis after the shift x -> x + t^w, verified over F(t).");
  shift->add_option("--vectorpoly", vp_path, "Vector polynomial file")->required();
  shift->add_option("--weights", weights, "Comma-separated weights (default: Kronecker weights)");

  auto* diag = app.add_subcommand("diag-pit", "PIT for depth-3 diagonal circuits via rank reduction and low-cone PIT. Exit 1 on NONZERO.");
  diag->add_option("--diag", diag_path, "Diagonal circuit file")->required();

  auto* deriv = app.add_subcommand("derivdim", "Dimension of the partial derivative space of a polynomial.");
  deriv->add_option("--poly", poly_path, "Polynomial file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (pit->parsed()) return emit_verdict(conepit::low_cone_pit(conepit::Oracle::from_circuit(load_circuit(circuit_path, g)), k), g);
    if (bfpit->parsed()) return emit_verdict(conepit::brute_force_pit(conepit::Oracle::from_circuit(load_circuit(circuit_path, g))), g);
    if (szpit->parsed())
      return emit_verdict(conepit::sz_pit(conepit::Oracle::from_circuit(load_circuit(circuit_path, g)), trials, seed), g);
    if (diag->parsed()) return emit_verdict(conepit::diag_pit(conepit::parse_diagonal(read_file(diag_path))), g);

    if (coef->parsed()) {
      const auto c = load_circuit(circuit_path, g);
      const auto x = conepit::extract_coefficient_counted(conepit::Oracle::from_circuit(c),
                                                          conepit::parse_monomial(monomial, c.arity()));
      if (g.json_out) {
        std::cout << json{{"coeff", x.coefficient.to_string()}, {"calls", x.oracle_calls}}.dump() << "\n";
      } else {
        std::cout << "coeff=" << x.coefficient << " calls=" << x.oracle_calls << "\n";
      }
      return kOk;
    }
    if (cones->parsed()) {
      const auto all = conepit::enumerate_low_cone(n_arg, k_arg, dcap);
      if (g.json_out) {
        json j{{"count", all.size()}};
        if (list) {
          j["monomials"] = json::array();
          for (const auto& e : all) j["monomials"].push_back(e.to_string());
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "count=" << all.size() << "\n";
        if (list)
          for (const auto& e : all) std::cout << e.to_string() << "\n";
      }
      return kOk;
    }
    if (closed->parsed()) {
      const auto b = conepit::parse_exponent_set(read_file(set_path));
      if (b.empty()) throw conepit::Error(ErrorKind::EmptyInput, "empty set");
      const auto a = conepit::find_cone_closed(b, b.front().arity());
      const auto r = conepit::rank(conepit::transfer_submatrix(a, b));
      const bool cc = conepit::is_cone_closed(a);
      if (g.json_out) {
        json set = json::array();
        for (const auto& e : a) set.push_back(e.entries());
        std::cout << json{{"A", set}, {"rank", r}, {"cone_closed", cc}}.dump() << "\n";
      } else {
        std::cout << "A=" << conepit::render_set(a) << " rank=" << r << " cone_closed=" << bool_text(cc) << "\n";
      }
      return kOk;
    }
    if (annih->parsed()) {
      const auto res = conepit::build_annihilator(conepit::parse_hsg(read_file(hsg_path)));
      if (g.json_out) {
        std::cout << json{{"delta", res.delta}, {"degree", res.g.degree()}, {"g", res.g.to_string()}}.dump() << "\n";
      } else {
        std::cout << "delta=" << res.delta << " degree=" << res.g.degree() << " g=" << res.g.to_string() << "\n";
      }
      return kOk;
    }
    if (design->parsed()) {
      const auto f = conepit::greedy_design(l, dn, dd);
      if (g.json_out) {
        json sets = json::array();
        for (const auto& s : f.subsets) {
          json one = json::array();
          for (auto x : s) one.push_back(x + 1);
          sets.push_back(std::move(one));
        }
        std::cout << json{{"count", f.subsets.size()}, {"subsets", sets}}.dump() << "\n";
      } else {
        std::cout << conepit::render_design(f);
      }
      return kOk;
    }
    if (fischer->parsed()) {
      const auto terms = conepit::parse_products(read_file(terms_path));
      const auto out = conepit::fischer_rewrite(terms);
      const std::size_t r = terms.front().size();
      if (g.json_out) {
        json items = json::array();
        for (const auto& [c, h] : out) items.push_back({{"c", c.to_string()}, {"h", h.to_string()}});
        std::cout << json{{"r", r}, {"terms", items}}.dump() << "\n";
      } else {
        std::cout << "r=" << r << " terms=" << out.size() << "\n";
        for (const auto& [c, h] : out) std::cout << c << " * (" << h.to_string() << ")^" << r << "\n";
      }
      return kOk;
    }
    if (kron->parsed()) {
      std::cout << conepit::serialize(conepit::local_kronecker(load_circuit(circuit_path, g), block));
      return kOk;
    }
    if (shift->parsed()) {
      const auto f = conepit::parse_vectorpoly(read_file(vp_path));
      const auto w = weights.empty() ? conepit::kronecker_weights(f.arity(), f.degree()) : conepit::parse_weights(weights);
      const auto res = conepit::cone_closed_basis_after_shift(f, w);
      const bool cc = conepit::is_cone_closed(res.cone);
      if (g.json_out) {
        json ja = json::array(), jb = json::array();
        for (const auto& e : res.cone) ja.push_back(e.entries());
        for (const auto& e : res.least) jb.push_back(e.entries());
        std::cout << json{{"B", jb}, {"A", ja}, {"rank", res.rank}, {"cone_closed", cc}}.dump() << "\n";
      } else {
        std::cout << "B=" << conepit::render_set(res.least) << " A=" << conepit::render_set(res.cone)
                  << " rank=" << res.rank << " cone_closed=" << bool_text(cc) << "\n";
      }
      return kOk;
    }
    if (deriv->parsed()) {
      const auto p = conepit::parse_poly_document(read_file(poly_path));
      const auto dim = conepit::pd_space_dim(p);
      if (g.json_out) {
        std::cout << json{{"dim", dim}}.dump() << "\n";
      } else {
        std::cout << "dim=" << dim << "\n";
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const conepit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool input_problem = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError;
    return input_problem ? kUsage : kPrecondition;
  }
  return kUsage;
}
