#pragma once

// Jacobi theta function on the positive real axis,
//   theta(x) = sum_{n in Z} exp(-pi n^2 x) = 1 + 2 sum_{n>=1} exp(-pi n^2 x),
// and its first two derivatives.

namespace xik {

struct ThetaEval {
  double x = 0.0;
  double value = 0.0;
  double d1 = 0.0;  // theta'(x)
  double d2 = 0.0;  // theta''(x)
};

/// All three series in one pass. Throws DomainError for x <= 0.
ThetaEval theta_eval(double x);

double theta(double x);
double theta_d1(double x);
double theta_d2(double x);

}  // namespace xik
