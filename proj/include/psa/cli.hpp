#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace psa {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitMathFailure = 1, kExitInputError = 2 };

struct RunConfig {
  std::string command; // check, center, strata, primitive, pcore, verify-ideal, core-test, poset
  std::string problem_path;

  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string stratum;              // primitive: comma-separated variable names, may be empty
  std::optional<std::string> alpha; // primitive: comma-separated nonzero rationals
  std::string point;                // pcore
  std::string ideal_path;           // verify-ideal, core-test
  std::string element;              // core-test
  std::size_t depth = 6;            // core-test
  std::string catalog_path;         // poset
  std::string dot_path;             // poset: write DOT here instead of standard output
  bool json = false;
};

/// Executes one command. Reports go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on a mathematical failure (axiom violation, failed
/// verification) and 2 on malformed or unsupported input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace psa
