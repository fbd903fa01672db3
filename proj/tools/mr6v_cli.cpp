// Command-line surface of the six-vertex toolkit: compute the partition
// function by any route, run the verification suites, evaluate homogeneous
// values and thermodynamic curves.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 precondition or
// configuration violation (the machine-readable violation name goes to
// stderr first).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mr6v/bigfloat.hpp"
#include "mr6v/formulas.hpp"
#include "mr6v/homogeneous.hpp"
#include "mr6v/oracle.hpp"
#include "mr6v/params_json.hpp"
#include "mr6v/thermo.hpp"
#include "mr6v/verify.hpp"

namespace {

using namespace mr6v;

struct GridSpec {
  BigFloat start, stop;
  std::size_t steps = 0;
};

GridSpec parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw Error(Violation::ParseError, "grid must be start:stop:steps");
  GridSpec g;
  g.start = BigFloat::parse(text.substr(0, first));
  g.stop = BigFloat::parse(text.substr(first + 1, second - first - 1));
  try {
    g.steps = std::stoul(text.substr(second + 1));
  } catch (const std::exception&) {
    throw Error(Violation::ParseError, "grid steps must be an integer");
  }
  if (g.steps < 2) throw Error(Violation::ParseError, "grid needs at least 2 steps");
  return g;
}

std::size_t oracle_height_cap() {
  if (const char* env = std::getenv("MR6V_MAX_N")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw Error(Violation::ParseError, "MR6V_MAX_N must be an integer");
    }
  }
  return oracle::kDefaultMaxHeight;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(Violation::ParseError, "cannot open output file '" + out_path + "'");
  out << text;
}

int cmd_z(const std::string& method, const std::string& params_path, std::size_t k,
          const std::string& out_path) {
  const ParamsFile file = load_params_file(params_path);
  const InhomParams p = file.make_params();

  Rational z;
  if (method == "bruteforce") {
    z = oracle::partition_bruteforce(p, file.require_boundary(), oracle_height_cap());
  } else if (method == "block") {
    z = formulas::partition_block(p, file.require_boundary()).value;
  } else if (method == "mid-k1") {
    z = formulas::partition_mid(p, file.require_boundary(), formulas::Method::MidK1).value;
  } else if (method == "mid-k2") {
    z = formulas::partition_mid(p, file.require_boundary(), formulas::Method::MidK2).value;
  } else if (method == "mid-k3") {
    z = formulas::partition_mid(p, file.require_boundary(), formulas::Method::MidK3).value;
  } else if (method == "pdwbc") {
    z = formulas::partition_pdwbc(p, k);
  } else {
    throw Error(Violation::ParseError, "unknown method '" + method + "'");
  }

  std::ostringstream os;
  os << z.str() << "\n";
  os << "method: " << method << "\n";
  emit(os.str(), out_path);
  return 0;
}

int print_suites(const std::vector<verify::SuiteResult>& results, const std::string& out_path) {
  std::ostringstream os;
  bool all_pass = true;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << " " << r.name;
    if (!r.pass && !r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
    all_pass = all_pass && r.pass;
  }
  emit(os.str(), out_path);
  return all_pass ? 0 : 1;
}

int cmd_homog(const std::string& params_path, std::size_t n, std::size_t m,
              const std::string& x_text, const std::string& c_text,
              const std::string& out_path) {
  if (n == 0 || m == 0) throw Error(Violation::ParseError, "lattice sizes must be >= 1");
  const ParamsFile file = load_params_file(params_path);
  const Boundary& b = file.require_boundary();
  const Rational c = c_text.empty() ? file.c : Rational::parse(c_text);
  const homog::HomogParams hp{Rational::parse(x_text), c, n, m};

  const Rational z = homog::partition_homogeneous(hp, b);
  const Rational z_zero = homog::z0(n, m, b);

  // Physical weights: c = exp(-eps/kT); with kT = 1 this pins eps = -ln c.
  if (c.sign() <= 0)
    throw Error(Violation::NonPositiveTrace, "physical weights need c > 0");
  const BigFloat k_t = BigFloat::of(1L);
  const BigFloat eps = -BigFloat::of(c).log();
  const homog::FiniteThermo ft = homog::finite_thermodynamics(n, m, b, eps, k_t);

  std::ostringstream os;
  os << "Z: " << z.str() << "\n";
  os << "Z0: " << z_zero.str() << "\n";
  os << "F_tot: " << ft.f_tot.str() << "\n";
  os << "E_avg: " << ft.e_avg.str() << "\n";
  os << "E_fluct: " << ft.e_fluct.str() << "\n";
  os << "C_V: " << ft.c_v.str() << "\n";
  os << "S: " << ft.s.str() << "\n";
  emit(os.str(), out_path);
  return 0;
}

int cmd_thermo_curves(const std::string& beta_tilde_text, const std::string& grid_text,
                      const std::string& out_path) {
  const Rational beta_tilde = Rational::parse(beta_tilde_text);
  const GridSpec grid = parse_grid(grid_text);

  std::ostringstream os;
  os << "x_tilde,F_tilde,E_avg,E_fluct_sq,S\n";
  const BigFloat k_t = BigFloat::of(1L);
  const BigFloat span = grid.stop - grid.start;
  const BigFloat denom = BigFloat::of(static_cast<long>(grid.steps - 1));
  std::size_t in_domain = 0;
  for (std::size_t i = 0; i < grid.steps; ++i) {
    const BigFloat x = grid.start + span * BigFloat::of(static_cast<long>(i)) / denom;
    const thermo::ThermoCurvePoint pt = thermo::curve_point(x, beta_tilde, k_t);
    os << pt.x_tilde.str();
    if (pt.in_domain) {
      os << "," << pt.f_tilde.str() << "," << pt.e_avg.str() << "," << pt.e_fluct_sq.str()
         << "," << pt.s.str() << "\n";
      ++in_domain;
    } else {
      os << ",,,,\n";  // out-of-domain rows keep their place in the grid
    }
  }
  if (in_domain == 0) throw Error(Violation::DomainViolation, "empty effective grid");
  emit(os.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for the six-vertex model with general boundary conditions"};
  app.require_subcommand(1);

  std::string method, params_path, out_path, x_text, c_text, grid_text, beta_tilde_text;
  std::size_t n = 1, m = 1, k = 0;
  std::uint64_t seed = 0;

  auto* z_cmd = app.add_subcommand("z", "Partition function by the chosen method");
  z_cmd->add_option("--method", method, "bruteforce | mid-k1 | mid-k2 | mid-k3 | block | pdwbc")
      ->required();
  z_cmd->add_option("--params", params_path, "JSON parameter file")->required();
  z_cmd->add_option("--k", k, "inward-arrow count for pdwbc (default 0)");
  z_cmd->add_option("--out", out_path, "write stdout payload to a file");

  auto* verify_cmd = app.add_subcommand("verify", "Run every verification suite");
  verify_cmd->add_option("--seed", seed, "RNG seed (default 0)");
  verify_cmd->add_option("--out", out_path, "write stdout payload to a file");

  auto* ident_cmd = app.add_subcommand("identities", "Run the appendix-identity suites");
  ident_cmd->add_option("--seed", seed, "RNG seed (default 0)");
  ident_cmd->add_option("--out", out_path, "write stdout payload to a file");

  auto* homog_cmd = app.add_subcommand("homog", "Homogeneous value and finite thermodynamics");
  homog_cmd->add_option("--params", params_path, "JSON file providing the boundary (and c)")
      ->required();
  homog_cmd->add_option("--n", n, "rows")->required();
  homog_cmd->add_option("--m", m, "columns")->required();
  homog_cmd->add_option("--x", x_text, "vertex parameter x = u - v (rational)")->required();
  homog_cmd->add_option("--c", c_text, "crossing constant override (rational)");
  homog_cmd->add_option("--out", out_path, "write stdout payload to a file");

  auto* curves_cmd = app.add_subcommand("thermo-curves", "Infinite-lattice curves as CSV");
  curves_cmd->add_option("--beta-tilde", beta_tilde_text, "beta~ (rational)")->required();
  curves_cmd->add_option("--grid", grid_text, "x~ grid start:stop:steps")->required();
  curves_cmd->add_option("--out", out_path, "write CSV to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // keep the exit-code contract: usage problems are configuration errors
    std::cerr << "ParseError\n" << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(z_cmd)) return cmd_z(method, params_path, k, out_path);
    if (app.got_subcommand(verify_cmd))
      return print_suites(verify::run_all({seed, false}), out_path);
    if (app.got_subcommand(ident_cmd))
      return print_suites(verify::run_identities({seed, false}), out_path);
    if (app.got_subcommand(homog_cmd))
      return cmd_homog(params_path, n, m, x_text, c_text, out_path);
    if (app.got_subcommand(curves_cmd))
      return cmd_thermo_curves(beta_tilde_text, grid_text, out_path);
  } catch (const Error& e) {
    std::cerr << e.name() << "\n" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "InternalError\n" << e.what() << "\n";
    return 2;
  }
  return 2;
}
