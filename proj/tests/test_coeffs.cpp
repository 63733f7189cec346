#include "doctest.h"

#include <cmath>

#include "xik/coeffs.hpp"
#include "xik/errors.hpp"

using namespace xik;

namespace {

Rational rpow(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

TEST_CASE("sinh^2 = (cosh 2x - 1)/2 and sinh^4") {
  const auto t1 = sinh_power_coeffs_exact(1);
  CHECK(t1.at(0) == Rational(-1, 2));
  CHECK(t1.at(1) == Rational(1, 2));
  // sinh^4 x = (cosh 4x - 4 cosh 2x + 3) / 8
  const auto t2 = sinh_power_coeffs_exact(2);
  CHECK(t2.at(0) == Rational(3, 8));
  CHECK(t2.at(1) == Rational(-1, 2));
  CHECK(t2.at(2) == Rational(1, 8));
}

TEST_CASE("sinh-power rows sum to zero for k <= 10") {
  for (int k = 1; k <= 10; ++k) {
    Rational s = 0;
    for (const auto& e : sinh_power_coeffs_exact(k).entries) s += e;
    CHECK(s == 0);
  }
}

TEST_CASE("sinh-power expansion is pointwise exact") {
  // small x loses digits to cancellation between the cosh terms
  for (int k = 1; k <= 6; ++k) {
    const CoeffTable t = sinh_power_coeffs(k);
    for (double x : {0.5, 0.9, 1.3}) {
      CHECK(eval_sinh_power(t, x) == doctest::Approx(std::pow(std::sinh(x), 2 * k)).epsilon(1e-10));
    }
  }
}

TEST_CASE("h coefficients: small case by hand") {
  // m = 1, a = 1/2: 4 cosh(t/4)(sinh^2 t + 3/4) = cosh(t/4)(2 cosh 2t + 1)
  const auto h = h_coeffs_exact(1, Rational(1, 2));
  CHECK(h.at(0) == Rational(1, 2));
  CHECK(h.at(1) == Rational(1));
}

TEST_CASE("h and j sum rules at t = 0") {
  const Rational a(2, 7), b(5, 9);
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    Rational hs = 0;
    for (const auto& e : h_coeffs_exact(m, a).entries) hs += 2 * e;
    CHECK(hs == rpow(4 * (1 - a * a), m));
    Rational js = 0;
    for (const auto& e : j_coeffs_exact(m, a, b).entries) js += 4 * e;
    CHECK(js == rpow(16 * a * b, m));
  }
}

TEST_CASE("expansions match the kernel factors pointwise for m <= 6") {
  const double a = 0.62, ja = 0.21, jb = 0.74;
  for (int m = 1; m <= 6; ++m) {
    const CoeffTable h = h_coeffs(m, a);
    const CoeffTable j = j_coeffs(m, ja, jb);
    for (double t : {0.0, 0.4, 1.7, 3.0}) {
      CAPTURE(m);
      CAPTURE(t);
      const double ch = std::cosh(t / m);
      const double direct_h = std::cosh(t / 4) * std::pow(4 * ch * ch - 4 * a * a, m);
      CHECK(eval_h_expansion(h, t) == doctest::Approx(direct_h).epsilon(1e-10));
      const double s = 4 * std::pow(std::sinh(t / (2 * m)), 2);
      const double direct_j = std::cosh(t / 4) * std::pow(s + 4 * ja, m) * std::pow(s + 4 * jb, m);
      CHECK(eval_j_expansion(j, t) == doctest::Approx(direct_j).epsilon(1e-10));
    }
  }
}

TEST_CASE("four-cosh form of p") {
  for (double t : {0.3, 2.2}) {
    const int m = 3, j = 2, l = 1;
    const double direct = 4 * std::cosh(t / 4) * std::cosh(j * t / m) * std::cosh(l * t / m);
    CHECK(p_four_cosh(m, j, l, t) == doctest::Approx(direct).epsilon(1e-14));
  }
}

TEST_CASE("double tables round exact ones") {
  const auto exact = j_coeffs_exact(3, Rational(1, 8), Rational(9, 10));
  const auto approx = j_coeffs(3, 0.125, 0.9);
  const auto converted = to_double(exact);
  for (std::size_t i = 0; i < approx.entries.size(); ++i) {
    CHECK(converted.entries[i] == doctest::Approx(approx.entries[i]).epsilon(1e-13));
  }
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(sinh_power_coeffs(0), DomainError);
  CHECK_THROWS_AS(sinh_power_coeffs(65), DomainError);
  CHECK_THROWS_AS(h_coeffs(2, 1.0), DomainError);
  CHECK_THROWS_AS(h_coeffs(2, -0.1), DomainError);
  CHECK_THROWS_AS(j_coeffs(2, 0.0, 0.5), DomainError);
}
