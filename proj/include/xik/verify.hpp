#pragma once

// Self-checks of every module's invariants, as run by `xik verify`.

#include <string>
#include <vector>

namespace xik {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// "theta", "besselk", "coeffs", "kernels", "xi", "zeros", "lp".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". PreconditionError for unknown names.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace xik
