#include "xik/theta.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xik/errors.hpp"

namespace xik {

using std::numbers::pi;

ThetaEval theta_eval(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("theta: argument must be finite and > 0, got " + std::to_string(x));
  }
  // Terms n^4 exp(-pi n^2 x) grow until n^2 = 2/(pi x); only stop past that.
  const double peak = std::sqrt(2.0 / (pi * x));
  double s0 = 0.0, s2 = 0.0, s4 = 0.0;
  for (int n = 1; n < 100000; ++n) {
    const double n2 = static_cast<double>(n) * n;
    const double e = std::exp(-pi * n2 * x);
    s0 += e;
    s2 += n2 * e;
    s4 += n2 * n2 * e;
    if (n > peak && n2 * n2 * e <= 1e-30 * s4 && e <= 1e-30 * s0) break;
  }
  ThetaEval out;
  out.x = x;
  out.value = 1.0 + 2.0 * s0;
  out.d1 = -2.0 * pi * s2;
  out.d2 = 2.0 * pi * pi * s4;
  return out;
}

double theta(double x) { return theta_eval(x).value; }
double theta_d1(double x) { return theta_eval(x).d1; }
double theta_d2(double x) { return theta_eval(x).d2; }

}  // namespace xik
