#pragma once

#include <string>
#include <vector>

#include "persist/phase_map.hpp"

namespace persist::cli {

enum ExitCode : int { kOk = 0, kDomainError = 2, kVerificationFailure = 3 };

struct CommandResult {
  int exit_code = kOk;
  std::string payload;  // written to stdout
};

struct Path {
  std::string name;
  std::vector<Rational> values;  // p_0..p_n
};

/// Every exact route to p_0..p_n that applies at params: the dispatcher, each
/// applicable region formula, recurrence, combinatorial sums, dualities, and
/// the DP oracle last when n is within its cap.
std::vector<Path> computation_paths(const Params& params, std::size_t n);

/// Runs one subcommand; argv excludes the program name.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace persist::cli
