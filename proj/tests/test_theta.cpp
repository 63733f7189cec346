#include "doctest.h"

#include <cmath>
#include <numbers>

#include "xik/errors.hpp"
#include "xik/theta.hpp"

using namespace xik;
using std::numbers::pi;

namespace {

// Symmetric sum over n in [-60, 60], independent of the library's loop.
long double theta_direct(long double x) {
  long double s = 0.0L;
  for (int n = -60; n <= 60; ++n) s += std::exp(-static_cast<long double>(pi) * n * n * x);
  return s;
}

}  // namespace

TEST_CASE("theta matches direct summation") {
  for (double x : {0.05, 0.5, 1.0, 3.0}) {
    CHECK(theta(x) == doctest::Approx(static_cast<double>(theta_direct(x))).epsilon(1e-14));
  }
}

TEST_CASE("functional equation theta(1/x) = sqrt(x) theta(x)") {
  for (double x : {0.2, 0.6, 1.0, 2.5, 7.0}) {
    CHECK(std::abs(theta(1.0 / x) - std::sqrt(x) * theta(x)) < 1e-12);
  }
}

TEST_CASE("theta(1) closed form") {
  // theta(1) = pi^{1/4} / Gamma(3/4)
  CHECK(theta(1.0) == doctest::Approx(std::pow(pi, 0.25) / std::tgamma(0.75)).epsilon(1e-14));
}

TEST_CASE("derivatives agree with central differences") {
  const double h = 1e-4;
  for (double x : {0.3, 1.0, 2.0}) {
    const double fd1 = (theta(x + h) - theta(x - h)) / (2 * h);
    const double fd2 = (theta(x + h) - 2 * theta(x) + theta(x - h)) / (h * h);
    CHECK(theta_d1(x) == doctest::Approx(fd1).epsilon(1e-6));
    CHECK(theta_d2(x) == doctest::Approx(fd2).epsilon(1e-6));
  }
}

TEST_CASE("theta_eval bundles all three") {
  const ThetaEval e = theta_eval(0.8);
  CHECK(e.value == theta(0.8));
  CHECK(e.d1 == theta_d1(0.8));
  CHECK(e.d2 == theta_d2(0.8));
}

TEST_CASE("theta domain") {
  CHECK_THROWS_AS(theta(0.0), DomainError);
  CHECK_THROWS_AS(theta(-1.0), DomainError);
  CHECK_THROWS_AS(theta(std::nan("")), DomainError);
}

TEST_CASE("Phi(0) from theta derivatives") {
  // The kernel series at t = 0 is theta''(1) + (3/2) theta'(1)
  const ThetaEval e = theta_eval(1.0);
  CHECK(e.d2 + 1.5 * e.d1 == doctest::Approx(0.44669690046712344).epsilon(1e-13));
}
