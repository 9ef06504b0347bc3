#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "entgeo/construction.hpp"
#include "entgeo/coordinates.hpp"
#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/grid.hpp"
#include "entgeo/order.hpp"
#include "entgeo/poset.hpp"
#include "entgeo/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitIsoFailure = 2;
constexpr int kExitInputError = 3;

struct GlobalOptions {
  std::string log_base = "2";
  bool normalized = false;
  bool json = false;
  unsigned jobs = 1;
};

double parse_log_base(const std::string& text) {
  if (text == "e") return std::numbers::e;
  const double base = entgeo::rat_double(entgeo::parse_rat(text));
  if (!(base > 1.0))
    throw entgeo::PreconditionError("log base must be > 1 (or 'e')");
  return base;
}

int cmd_order(const std::string& xs, const std::string& ys) {
  using namespace entgeo;
  const Dist x = Dist::parse(xs);
  const Dist y = Dist::parse(ys);
  const bool xy = leq(x, y);
  const bool yx = leq(y, x);
  if (xy && yx) {
    std::cout << "x = y\n";
  } else if (xy) {
    std::cout << "x ⊑ y\n";
  } else if (yx) {
    std::cout << "y ⊑ x\n";
  } else {
    std::cout << "incomparable\n";
    return kExitOk;
  }
  std::cout << "joint monotonization: sigma = "
            << joint_monotonization(x, y)->str() << "\n";
  return kExitOk;
}

int cmd_decompose(const std::string& xs, bool verify_roundtrip) {
  using namespace entgeo;
  const Dist x = Dist::parse(xs);
  const CoordSet coords = coordinates_of(x);
  if (coords.empty()) {
    std::cout << "bottom: empty coordinate set\n";
    return kExitOk;
  }
  for (std::size_t j = 0; j < coords.size(); ++j)
    std::cout << "c(" << (j + 1) << ") axis "
              << index_set_str(coords[j].axis, x.size()) << ": "
              << coords[j].dist.str() << "\n";
  if (verify_roundtrip) {
    const Dist back = sup_coordinates(x.size(), coords);
    if (back == x) {
      std::cout << "roundtrip OK\n";
    } else {
      std::cout << "roundtrip FAILED: recomposed " << back.str() << "\n";
      return kExitPropertyFailure;
    }
  }
  return kExitOk;
}

int cmd_entropy(const std::string& xs, const GlobalOptions& opt) {
  using namespace entgeo;
  const Dist x = Dist::parse(xs);
  const EntropyValue mu =
      shannon(x, parse_log_base(opt.log_base), opt.normalized);
  std::printf("%.12g\n", mu.value);
  return kExitOk;
}

entgeo::FinitePoset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw entgeo::ParseError("cannot open poset file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return entgeo::FinitePoset::from_json(buffer.str());
}

int cmd_construct(const std::string& poset_file, std::size_t gamma_levels,
                  const std::string& gamma_values, const std::string& emit_dot,
                  int check_iso) {
  using namespace entgeo;
  const FinitePoset a = load_poset(poset_file);
  GammaChain gamma = GammaChain::uniform(gamma_levels);
  if (!gamma_values.empty()) {
    std::vector<Rat> values;
    std::istringstream in(gamma_values);
    std::string token;
    while (std::getline(in, token, ',')) values.push_back(parse_rat(token));
    if (values.size() != gamma_levels)
      throw PreconditionError("--gamma-values count must match --gamma-levels");
    gamma = GammaChain::from_values(std::move(values));
  }
  const ConstructedPoset p = build(a, gamma);
  if (p.empty_core)
    std::cout << "warning: core is empty, construction collapses to one "
                 "class\n";
  const FinitePoset q = to_poset(p);
  std::cout << p.classes.size() << " classes\n";
  std::cout << "bottom: " << p.class_str(p.bottom_index) << "\n";
  std::cout << q.covers().size() << " Hasse edges\n";
  if (!emit_dot.empty()) {
    std::ofstream out(emit_dot);
    if (!out) throw ParseError("cannot write DOT file: " + emit_dot);
    out << to_dot(q);
    std::cout << "wrote " << emit_dot << "\n";
  }
  if (check_iso > 0) {
    const IsoCertificate cert =
        check_classical_iso(static_cast<std::size_t>(check_iso), gamma);
    if (!cert.ok) {
      std::cout << "isomorphism FAILED: " << cert.failure << "\n";
      return kExitIsoFailure;
    }
    std::cout << "isomorphism with the simplex order verified ("
              << cert.pairing.size() << " classes)\n";
  }
  return kExitOk;
}

int cmd_hasse(const std::string& poset_file, std::size_t powerset_n,
              std::size_t chain_m) {
  using namespace entgeo;
  FinitePoset p = [&] {
    if (!poset_file.empty()) return load_poset(poset_file);
    if (powerset_n > 0) return powerset_lattice(powerset_n);
    if (chain_m > 0) return chain_poset(chain_m);
    throw PreconditionError("hasse needs --poset, --powerset, or --chain");
  }();
  std::cout << to_dot(p);
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::size_t n, unsigned denom,
               const GlobalOptions& opt) {
  using namespace entgeo;
  if (n < 2) throw DimensionError("verify needs n >= 2");
  const auto results = verify::run_suite(suite, n, denom);
  bool all_pass = true;
  if (opt.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const PropertyResult& r : results) {
      j.push_back({{"name", r.name},
                   {"instances", r.instances},
                   {"pass", r.pass},
                   {"advisory", r.advisory},
                   {"detail", r.detail}});
      if (!r.pass) all_pass = false;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const PropertyResult& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " ("
                << r.instances << " instances)";
      if (!r.detail.empty()) std::cout << " " << r.detail;
      std::cout << "\n";
      if (!r.pass) all_pass = false;
    }
  }
  return all_pass ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian order on probability simplices: order queries, "
               "coordinate decomposition, entropy, and the order-theoretic "
               "state-space construction"};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--log-base", opt.log_base,
                 "logarithm base for entropy (rational or 'e')");
  app.add_flag("--normalized", opt.normalized,
               "divide entropy by log(n) to land in [0,1]");
  app.add_flag("--json", opt.json, "machine-readable output where supported");
  app.add_option("--jobs", opt.jobs, "worker cap for verification sweeps");

  std::string x_text, y_text;
  auto* order = app.add_subcommand("order", "compare two distributions");
  order->add_option("x", x_text, "first distribution")->required();
  order->add_option("y", y_text, "second distribution")->required();

  std::string dx_text;
  bool verify_roundtrip = false;
  auto* decompose =
      app.add_subcommand("decompose", "coordinate decomposition of a state");
  decompose->add_option("x", dx_text, "distribution")->required();
  decompose->add_flag("--verify-roundtrip", verify_roundtrip,
                      "re-compose and compare");

  std::string ex_text;
  auto* entropy = app.add_subcommand("entropy", "Shannon entropy of a state");
  entropy->add_option("x", ex_text, "distribution")->required();

  std::string poset_file, gamma_values, emit_dot;
  std::size_t gamma_levels = 1;
  int check_iso = 0;
  auto* construct = app.add_subcommand(
      "construct", "build the state-space poset from a bounded poset");
  construct->add_option("--poset", poset_file, "poset JSON file")->required();
  construct->add_option("--gamma-levels", gamma_levels,
                        "number of interior levels of the gauge chain");
  construct->add_option("--gamma-values", gamma_values,
                        "comma-separated interior level values");
  construct->add_option("--emit-dot", emit_dot, "write the Hasse diagram");
  construct->add_option("--check-iso", check_iso,
                        "verify the isomorphism with the simplex of this "
                        "dimension");

  std::string hasse_file;
  std::size_t hasse_powerset = 0, hasse_chain = 0;
  auto* hasse = app.add_subcommand("hasse", "emit a Hasse diagram as DOT");
  hasse->add_option("--poset", hasse_file, "poset JSON file");
  hasse->add_option("--powerset", hasse_powerset, "powerset lattice on n");
  hasse->add_option("--chain", hasse_chain, "chain with m elements");

  std::string suite = "all";
  std::size_t verify_n = 3;
  unsigned verify_denom = 6;
  auto* verify = app.add_subcommand("verify", "run property sweeps");
  verify->add_option("suite", suite,
                     "order-axioms|equivalence|entropy|degeneration|"
                     "decomposition|construction|isomorphisms|all");
  verify->add_option("--n", verify_n, "simplex dimension");
  verify->add_option("--grid", verify_denom, "grid denominator");

  CLI11_PARSE(app, argc, argv);

  try {
    if (order->parsed()) return cmd_order(x_text, y_text);
    if (decompose->parsed()) return cmd_decompose(dx_text, verify_roundtrip);
    if (entropy->parsed()) return cmd_entropy(ex_text, opt);
    if (construct->parsed())
      return cmd_construct(poset_file, gamma_levels, gamma_values, emit_dot,
                           check_iso);
    if (hasse->parsed())
      return cmd_hasse(hasse_file, hasse_powerset, hasse_chain);
    if (verify->parsed()) return cmd_verify(suite, verify_n, verify_denom, opt);
  } catch (const entgeo::IsoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIsoFailure;
  } catch (const entgeo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
