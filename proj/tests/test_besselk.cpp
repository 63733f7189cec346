#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "xik/besselk.hpp"
#include "xik/errors.hpp"

using namespace xik;
using std::numbers::pi;

namespace {

// K_0(x) = -(ln(x/2) + gamma_E) I_0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 H_k
double k0_series(double x) {
  const double q = x * x / 4.0;
  double term = 1.0;
  double i0 = 1.0;
  double tail = 0.0;
  double harmonic = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    tail += term * harmonic;
  }
  return -(std::log(x / 2.0) + std::numbers::egamma) * i0 + tail;
}

struct Frozen {
  double c, nu, re, im;
};

// mpmath besselk(c + i nu, 2 pi) at 40 digits
constexpr Frozen kFrozen[] = {
    {0.75, 1.0, 0.00088204921716036260799, 0.000098608274990022695382},
    {0.75, 7.0, 0.000010451833183661252818, 0.000015005065760814313021},
    {0.75, 40.0, 6.1407951472400790616e-28, -2.7965133361665118618e-28},
    {2.25, 20.0, 9.0028625362007689119e-14, 3.8747345668254759083e-13},
    {0.25, 60.0, -4.3394546568181817343e-42, -2.1896921587301238922e-42},
};

}  // namespace

TEST_CASE("K_{1/2}(2 pi) closed form") {
  const auto k = bessel_k({0.5, 0.0}, 2 * pi);
  CHECK(k.real() == doctest::Approx(0.5 * std::exp(-2 * pi)).epsilon(1e-12));
  CHECK(k.imag() == 0.0);
}

TEST_CASE("K_0(1) against the power series") {
  CHECK(bessel_k({0.0, 0.0}, 1.0).real() == doctest::Approx(k0_series(1.0)).epsilon(1e-12));
  CHECK(k0_series(1.0) == doctest::Approx(0.42102443824070833).epsilon(1e-14));
}

TEST_CASE("complex orders against frozen high-precision values") {
  for (const Frozen& f : kFrozen) {
    CAPTURE(f.nu);
    const auto k = bessel_k({f.c, f.nu}, 2 * pi);
    const double scale = std::hypot(f.re, f.im);
    CHECK(std::abs(k - std::complex<double>(f.re, f.im)) / scale < 1e-10);
  }
}

TEST_CASE("symmetry K_{-v} = K_v and conjugation K_{conj v} = conj K_v") {
  for (double nu : {1.0, 7.0, 40.0}) {
    CAPTURE(nu);
    const auto k = bessel_k({1.25, nu}, 2 * pi);
    const double scale = std::abs(k);
    CHECK(std::abs(bessel_k({-1.25, -nu}, 2 * pi) - k) / scale < 1e-12);
    CHECK(std::abs(bessel_k({1.25, -nu}, 2 * pi) - std::conj(k)) / scale < 1e-12);
  }
}

TEST_CASE("g_pair is twice the real part and even in c and nu") {
  for (double nu : {0.0, 1.0, 7.0, 40.0}) {
    CAPTURE(nu);
    const auto k = bessel_k({0.75, nu}, 2 * pi);
    const double g = g_pair(0.75, nu, 2 * pi);
    CHECK(std::abs(g - 2 * k.real()) <= 1e-10 * std::abs(k));
    CHECK(g_pair(-0.75, nu, 2 * pi) == doctest::Approx(g).epsilon(1e-13));
    CHECK(g_pair(0.75, -nu, 2 * pi) == doctest::Approx(g).epsilon(1e-13));
  }
}

TEST_CASE("g_pair_batch equals per-order calls") {
  const std::vector<double> orders{0.0, 0.25, 1.25, 2.25};
  for (double nu : {0.5, 12.0}) {
    const auto batch = g_pair_batch(orders, nu, 2 * pi);
    for (std::size_t i = 0; i < orders.size(); ++i) CHECK(batch[i] == doctest::Approx(g_pair(orders[i], nu, 2 * pi)).epsilon(1e-12));
  }
}

TEST_CASE("argument and order validation") {
  CHECK_THROWS_AS(bessel_k({0.5, 0.0}, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_k({0.5, 0.0}, -1.0), DomainError);
  CHECK_THROWS_AS(bessel_k({5.0, 0.0}, 1.0), PreconditionError);
  CHECK_THROWS_AS(g_pair(0.0, 500.0, 1.0), PreconditionError);
}
