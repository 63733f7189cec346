#pragma once

// Real zeros of Xi-type functions: grid scan for sign changes, bracket
// refinement, and pairing of two zero sets.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "xik/kernels.hpp"
#include "xik/xi.hpp"

namespace xik {

struct ZeroReport {
  std::optional<KernelFamily> family;  // empty for a plain function
  std::pair<double, double> range{0.0, 0.0};
  double step = 0.0;
  double tol = 0.0;
  std::vector<double> zeros;
  int count = 0;
  std::vector<double> residuals;  // |f(zero)| / scale(zero)
};

inline constexpr double kDefaultZeroStep = 0.05;
inline constexpr double kDefaultZeroTol = 1e-10;

/// Zeros of xi_at(family, ...) in (lo, hi]. 0 <= lo < hi <= 100, step <= 0.25.
/// Residuals are reported relative to N(z).
ZeroReport locate_zeros(const KernelFamily& family, const ResolvedParams& params, double lo, double hi,
                        double step = kDefaultZeroStep, double tol = kDefaultZeroTol,
                        std::optional<TransformMethod> method = std::nullopt);

/// Same scan for any function; residuals relative to scale(z) (1 if empty).
ZeroReport locate_zeros_fn(const std::function<double(double)>& f, double lo, double hi, double step, double tol,
                           const std::function<double(double)>& scale = {});

struct ZeroPairing {
  std::vector<std::pair<double, double>> matched;
  double max_delta = 0.0;
  std::vector<double> unmatched_first;
  std::vector<double> unmatched_second;
};

/// Greedy left-to-right pairing: each zero of r1 takes the nearest unused
/// zero of r2 within radius. PreconditionError unless both cover the same range.
ZeroPairing compare_zero_sets(const ZeroReport& r1, const ZeroReport& r2, double pairing_radius);

}  // namespace xik
