#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mr6v::verify {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass; what failed otherwise
};

struct Options {
  std::uint64_t seed = 0;
  /// Test-only negative control: flips one entry of one binomial matrix so
  /// the binomial suite must FAIL. Never exposed on the CLI.
  bool inject_binomial_fault = false;
};

/// Runs every cross-formula and appendix-identity suite. Deterministic in
/// the seed: same options, same instance choices, same output.
std::vector<SuiteResult> run_all(const Options& options);

/// The appendix-identity subset (cauchy, binomial, symmetric, vandermonde,
/// residue) behind the `identities` subcommand.
std::vector<SuiteResult> run_identities(const Options& options);

}  // namespace mr6v::verify
