#include "xik/zeros.hpp"

#include <cmath>
#include <string>

#include "xik/errors.hpp"
#include "xik/numerics.hpp"
#include "xik/parallel.hpp"

namespace xik {

namespace {

void check_scan(double lo, double hi, double step, double tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw PreconditionError("zeros: need lo < hi");
  if (!(step > 0.0)) throw PreconditionError("zeros: step must be > 0");
  if (!(tol > 0.0)) throw PreconditionError("zeros: tol must be > 0");
}

ZeroReport scan(const std::function<double(double)>& f, double lo, double hi, double step, double tol,
                const std::function<double(double)>& scale) {
  ZeroReport report;
  report.range = {lo, hi};
  report.step = step;
  report.tol = tol;
  const std::vector<double> xs = scan_grid(lo, hi, step);
  std::vector<double> values(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { values[i] = f(xs[i]); });
  for (const Bracket& b : sign_changes(xs, values)) {
    const double z = b.degenerate() ? b.lo : find_root(f, b, tol);
    const double s = scale ? scale(z) : 1.0;
    report.zeros.push_back(z);
    report.residuals.push_back(std::abs(f(z)) / s);
  }
  report.count = static_cast<int>(report.zeros.size());
  return report;
}

}  // namespace

ZeroReport locate_zeros(const KernelFamily& family, const ResolvedParams& params, double lo, double hi,
                        double step, double tol, std::optional<TransformMethod> method) {
  check_scan(lo, hi, step, tol);
  if (lo < 0.0 || hi > 100.0) throw PreconditionError("locate_zeros: need 0 <= lo < hi <= 100");
  if (step > 0.25) throw PreconditionError("locate_zeros: step must be <= 0.25");
  const TransformMethod how = method.value_or(default_method(family));
  auto f = [&](double z) { return xi_at(family, params, z, how); };
  ZeroReport report = scan(f, lo, hi, step, tol, [](double z) { return normalization(std::abs(z)); });
  report.family = family;
  return report;
}

ZeroReport locate_zeros_fn(const std::function<double(double)>& f, double lo, double hi, double step, double tol,
                           const std::function<double(double)>& scale) {
  check_scan(lo, hi, step, tol);
  return scan(f, lo, hi, step, tol, scale);
}

ZeroPairing compare_zero_sets(const ZeroReport& r1, const ZeroReport& r2, double pairing_radius) {
  if (r1.range != r2.range) {
    throw PreconditionError("compare_zero_sets: reports cover different ranges");
  }
  if (!(pairing_radius >= 0.0)) throw PreconditionError("compare_zero_sets: radius must be >= 0");
  ZeroPairing out;
  std::vector<bool> used(r2.zeros.size(), false);
  for (const double z : r1.zeros) {
    std::size_t best = r2.zeros.size();
    double best_delta = pairing_radius;
    for (std::size_t j = 0; j < r2.zeros.size(); ++j) {
      if (used[j]) continue;
      const double delta = std::abs(r2.zeros[j] - z);
      if (delta <= best_delta) {
        if (best == r2.zeros.size() || delta < best_delta) {
          best = j;
          best_delta = delta;
        }
      }
    }
    if (best == r2.zeros.size()) {
      out.unmatched_first.push_back(z);
      continue;
    }
    used[best] = true;
    out.matched.emplace_back(z, r2.zeros[best]);
    out.max_delta = std::max(out.max_delta, best_delta);
  }
  for (std::size_t j = 0; j < r2.zeros.size(); ++j) {
    if (!used[j]) out.unmatched_second.push_back(r2.zeros[j]);
  }
  return out;
}

}  // namespace xik
