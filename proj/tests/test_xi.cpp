#include "doctest.h"

#include <cmath>
#include <numbers>

#include "xik/besselk.hpp"
#include "xik/errors.hpp"
#include "xik/xi.hpp"

using namespace xik;
using std::numbers::pi;

namespace {

// Dirichlet eta at s by the Cohen-Villegas-Zagier alternating-series acceleration.
double eta(double s) {
  const int n = 40;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d, sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c / std::pow(k + 1.0, s);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

// xi(1/2) = -(1/8) pi^{-1/4} Gamma(1/4) zeta(1/2), zeta(1/2) = eta(1/2) / (1 - sqrt 2)
double xi_half() {
  const double zeta_half = eta(0.5) / (1.0 - std::sqrt(2.0));
  return -0.125 * std::pow(pi, -0.25) * std::tgamma(0.25) * zeta_half;
}

struct Frozen {
  double z, value;
};

// Xi(z) = xi(1/2 + i z) by mpmath at 40 digits
constexpr Frozen kXi[] = {
    {10.0, 0.037967850310935684224},
    {30.0, -1.5016622479802074296e-8},
    {60.0, -2.9092748239358864396e-18},
    {99.0, -3.4826477943642242038e-31},
};

std::vector<KernelFamily> closed_form_families() {
  return {KernelFamily::polya(), KernelFamily::polya2(),     KernelFamily::de_bruijn(), KernelFamily::hejhal(1),
          KernelFamily::hejhal(4), KernelFamily::s1(11),     KernelFamily::s2(6, 0.01), KernelFamily::s2(7, 0.5),
          KernelFamily::s3(2),   KernelFamily::s3(3),        KernelFamily::s4(2),       KernelFamily::s4(3)};
}

}  // namespace

TEST_CASE("xi(1/2) oracle is sane") {
  CHECK(xi_half() == doctest::Approx(0.49712077818831410991).epsilon(1e-13));
}

TEST_CASE("exact transform at w = 0 is xi(1/2)") {
  const auto e = KernelFamily::exact();
  const auto p = resolve_params(e);
  CHECK(ft_at(e, p, 0.0, TransformMethod::Quadrature) == doctest::Approx(xi_half()).epsilon(1e-12));
  CHECK(phi_integral() == doctest::Approx(xi_half() / 2).epsilon(1e-12));
  CHECK(std::abs(phi_integral() - xi_at(e, p, 0.0, TransformMethod::Quadrature) / 2) < 1e-9);
}

TEST_CASE("exact transform against frozen Xi values") {
  const auto e = KernelFamily::exact();
  const auto p = resolve_params(e);
  for (const Frozen& f : kXi) {
    CAPTURE(f.z);
    CHECK(xi_at(e, p, f.z, TransformMethod::Quadrature) == doctest::Approx(f.value).epsilon(1e-9));
  }
}

TEST_CASE("first Riemann zero by bisection") {
  const auto e = KernelFamily::exact();
  const auto p = resolve_params(e);
  auto f = [&](double z) { return xi_at(e, p, z, TransformMethod::Quadrature); };
  REQUIRE(opposite_signs(f(14.0), f(14.3)));
  const double z = find_root(f, {14.0, 14.3, f(14.0), f(14.3)}, 1e-10, RootMethod::Bisection);
  CHECK(std::abs(z - 14.134725141734693) < 1e-3);
  CHECK(std::abs(z - 14.134725141734693) < 1e-8);
}

TEST_CASE("Polya closed form at 0 is 8 pi^2 K_{9/4}(2 pi)") {
  const auto f = KernelFamily::polya();
  const auto p = resolve_params(f);
  const double k = bessel_k({2.25, 0.0}, 2 * pi).real();
  CHECK(ft_at(f, p, 0.0, TransformMethod::BesselClosedForm) == doctest::Approx(8 * pi * pi * k).epsilon(1e-13));
}

TEST_CASE("closed form equals quadrature for every family") {
  for (const auto& f : closed_form_families()) {
    const auto p = resolve_params(f);
    for (double w : {0.0, 5.0, 20.0, 60.0}) {
      CAPTURE(f.name());
      CAPTURE(w);
      const double cf = ft_at(f, p, w, TransformMethod::BesselClosedForm);
      const double q = ft_at(f, p, w, TransformMethod::Quadrature);
      CHECK(std::abs(cf - q) <= 1e-8 * std::max(1.0, std::abs(cf)));
      // and relative to the value itself, which the contour shift makes possible
      CHECK(std::abs(cf - q) <= 1e-9 * std::abs(cf));
    }
  }
}

TEST_CASE("closed-form terms reconstruct the kernel") {
  for (const auto& f : closed_form_families()) {
    const auto p = resolve_params(f);
    const auto terms = closed_form_terms(f, p);
    for (double t : {0.0, 0.9, 2.4}) {
      CAPTURE(f.name());
      CHECK(eval_terms(terms, t) == doctest::Approx(eval_kernel(f, p, t)).epsilon(1e-11));
    }
  }
}

TEST_CASE("S1(11) at z = 0 equals twice the kernel integral") {
  const auto f = KernelFamily::s1(11);
  const auto p = resolve_params(f);
  const double direct = 2 * integrate_semi_infinite([&](double t) { return eval_kernel(f, p, t); }, QuadratureConfig{});
  CHECK(xi_at(f, p, 0.0, TransformMethod::BesselClosedForm) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("xi_at is even and takes half arguments") {
  for (const auto& f : {KernelFamily::exact(), KernelFamily::s2(7, 0.5)}) {
    const auto p = resolve_params(f);
    const auto m = default_method(f);
    for (double z : {2.0, 21.0, 77.0}) {
      CHECK(std::abs(xi_at(f, p, -z, m) - xi_at(f, p, z, m)) <= 1e-12);
      CHECK(xi_at(f, p, z, m) == ft_at(f, p, z / 2, m));
    }
  }
}

TEST_CASE("closed form is unavailable for the exact kernel") {
  const auto e = KernelFamily::exact();
  const auto p = resolve_params(e);
  CHECK_FALSE(has_closed_form(e));
  CHECK_THROWS_AS(ft_at(e, p, 1.0, TransformMethod::BesselClosedForm), PreconditionError);
  CHECK_THROWS_AS(ft_at(e, p, 150.0, TransformMethod::Quadrature), PreconditionError);
}

TEST_CASE("normalization") {
  CHECK(normalization(0.0) == 1.0);
  CHECK(normalization(3.0) == doctest::Approx(16 * std::exp(-3 * pi / 4)).epsilon(1e-15));
  CHECK_THROWS_AS(normalization(-1.0), DomainError);
}

TEST_CASE("normalized curves stay within [0, 10] on [0, 100]") {
  const auto zs = scan_grid(0.0, 100.0, 0.5);
  for (const auto& f : {KernelFamily::exact(), KernelFamily::polya(), KernelFamily::s4(3)}) {
    const Curve c = xi_curve(f, resolve_params(f), zs, default_method(f), true);
    CHECK(c.normalized);
    REQUIRE(c.values.size() == zs.size());
    for (double v : c.values) CHECK(std::abs(v) <= 10.0);
  }
}

TEST_CASE("relative L1 differences") {
  struct Case {
    KernelFamily family;
    double percent;
  };
  const Case cases[] = {{KernelFamily::s1(11), 7.949691},     {KernelFamily::s2(6, 0.01), 2.497861},
                        {KernelFamily::s2(7, 0.5), 3.916332}, {KernelFamily::s3(2), 0.835144},
                        {KernelFamily::s3(3), 0.402822}};
  for (const Case& c : cases) {
    CAPTURE(c.family.name());
    CHECK(std::abs(rel_l1_diff(c.family, resolve_params(c.family)) - c.percent) <= 0.05);
  }
  const auto e = KernelFamily::exact();
  CHECK_THROWS_AS(rel_l1_diff(e, resolve_params(e)), PreconditionError);
}

TEST_CASE("relative L1 grows with m for S1") {
  // the S1 family converges to a limit kernel as m grows, away from Phi
  const double d11 = rel_l1_diff(KernelFamily::s1(11), resolve_params(KernelFamily::s1(11)));
  const double d21 = rel_l1_diff(KernelFamily::s1(21), resolve_params(KernelFamily::s1(21)));
  const double d100 = rel_l1_diff(KernelFamily::s1(100), resolve_params(KernelFamily::s1(100)));
  CHECK(d11 < d21);
  CHECK(d21 < d100);
}
