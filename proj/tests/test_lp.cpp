#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "xik/errors.hpp"
#include "xik/kernels.hpp"
#include "xik/lp.hpp"

using namespace xik;
using std::numbers::pi;

namespace {

CoeffSeq random_increasing(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> gap(1e-3, 3.0);
  CoeffSeq s;
  double v = gap(rng);
  for (int k = 0; k <= n; ++k) {
    s.a.push_back(v);
    v += gap(rng);
  }
  return s;
}

}  // namespace

TEST_CASE("ek_applies") {
  CHECK(ek_applies({{1, 2, 3}}));
  CHECK_FALSE(ek_applies({{3, 2, 1}}));
  CHECK_FALSE(ek_applies({{0, 1, 2}}));
  CHECK_FALSE(ek_applies({{1, 1, 2}}));
}

TEST_CASE("S1(11) cosine coefficients qualify") {
  const double b = *resolve_params(KernelFamily::s1(11)).b;
  const CoeffSeq s = s1_cosine_sequence(11, b);
  CHECK(s.a.size() == 12);
  CHECK(ek_applies(s));
  CHECK(roots_in_unit_disk(s));
}

TEST_CASE("roots of 1 + 2z + 3z^2") {
  const auto roots = polynomial_roots({{1, 2, 3}});
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(r.real() == doctest::Approx(-1.0 / 3).epsilon(1e-12));
    CHECK(std::abs(r.imag()) == doctest::Approx(std::sqrt(2.0) / 3).epsilon(1e-12));
    CHECK(std::abs(r) == doctest::Approx(std::sqrt(3.0) / 3).epsilon(1e-12));
  }
  CHECK(roots_in_unit_disk({{1, 2, 3}}));
  CHECK_FALSE(roots_in_unit_disk({{1, 0.5}}));
}

TEST_CASE("roots of z^n - 1 lie on the circle") {
  CoeffSeq s{std::vector<double>(13, 0.0)};
  s.a.front() = -1.0;
  s.a.back() = 1.0;
  for (const auto& r : polynomial_roots(s)) CHECK(std::abs(r) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random increasing sequences: roots in the unit disk, invariant under scaling") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> degree(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    CoeffSeq s = random_increasing(rng, degree(rng));
    REQUIRE(ek_applies(s));
    CHECK(roots_in_unit_disk(s));
    for (double& v : s.a) v *= 37.5;
    CHECK(roots_in_unit_disk(s));
  }
}

TEST_CASE("A = 1 + 2 cos(alpha)") {
  const TrigRootReport r = trig_realroot_report({{1, 2}});
  REQUIRE(r.count_a == 2);
  CHECK(r.a_zeros[0] == doctest::Approx(2 * pi / 3).epsilon(1e-12));
  CHECK(r.a_zeros[1] == doctest::Approx(4 * pi / 3).epsilon(1e-12));
  CHECK(r.count_b == 2);
  CHECK(r.b_zeros[0] == 0.0);
  CHECK(r.b_zeros[1] == doctest::Approx(pi).epsilon(1e-12));
  CHECK(r.interlacing);
}

TEST_CASE("2n zeros each and interlacing") {
  for (const CoeffSeq& s : {CoeffSeq{{1, 2, 3}}, CoeffSeq{{1, 2, 3, 4, 5}}}) {
    const TrigRootReport r = trig_realroot_report(s);
    CHECK(r.count_a == 2 * s.degree());
    CHECK(r.count_b == 2 * s.degree());
    CHECK(r.interlacing);
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CoeffSeq s = random_increasing(rng, 1 + trial % 10);
    const TrigRootReport r = trig_realroot_report(s);
    CHECK(r.count_a == 2 * s.degree());
    CHECK(r.count_b == 2 * s.degree());
    CHECK(r.interlacing);
  }
}

TEST_CASE("a coarse scan that hides two zeros in one cell is diagnosed") {
  // A = 100 + 101 cos(a) vanishes at pi +- 0.141; with 15 cells both fall in [2.93, 3.35]
  CHECK_THROWS_AS(trig_realroot_report({{100, 101}}, 15), NumericalError);
  CHECK(trig_realroot_report({{100, 101}}).count_a == 2);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(trig_realroot_report({{3, 2, 1}}), PreconditionError);
  CHECK_THROWS_AS(polynomial_roots({{1}}), PreconditionError);
  CHECK_THROWS_AS(polynomial_roots({{1, 0}}), PreconditionError);
}
