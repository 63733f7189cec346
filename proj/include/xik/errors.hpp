#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace xik {

/// Argument outside the mathematical domain of a function (x <= 0 for theta, a <= 0 for K).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller broke an operation's contract (bad bracket, mismatched family/params, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A kernel family's parameters violate the condition of the theorem that licenses it.
/// The message names the condition, e.g. "Theorem 1 requires m >= 11".
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Iterative numerics failed to converge. Carries the last two estimates.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what,
                          double previous = std::numeric_limits<double>::quiet_NaN(),
                          double current = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(what), previous_(previous), current_(current) {}

  double previous() const noexcept { return previous_; }
  double current() const noexcept { return current_; }

 private:
  double previous_;
  double current_;
};

}  // namespace xik
