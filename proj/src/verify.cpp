#include "xik/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "xik/besselk.hpp"
#include "xik/coeffs.hpp"
#include "xik/errors.hpp"
#include "xik/kernels.hpp"
#include "xik/lp.hpp"
#include "xik/theta.hpp"
#include "xik/xi.hpp"
#include "xik/zeros.hpp"

namespace xik {

namespace {

using std::numbers::pi;

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  // Runs the check; an exception counts as a failure carrying its message.
  void check(const std::string& name, const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    detail.precision(10);
    bool pass = false;
    try {
      pass = body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    results_.push_back({suite_, name, pass, detail.str()});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

bool close(std::ostream& os, double got, double want, double tol) {
  os << "got " << got << ", want " << want << " +- " << tol;
  return std::abs(got - want) <= tol;
}

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

std::vector<KernelFamily> closed_form_families() {
  return {KernelFamily::polya(), KernelFamily::polya2(), KernelFamily::de_bruijn(), KernelFamily::hejhal(1),
          KernelFamily::s1(11), KernelFamily::s2(6, 0.01), KernelFamily::s3(2), KernelFamily::s4(2)};
}

std::vector<CheckResult> theta_suite() {
  Recorder r("theta");
  r.check("functional equation theta(1/x) = sqrt(x) theta(x)", [](std::ostream& os) {
    double worst = 0.0;
    for (const double x : {0.3, 0.7, 1.0, 1.9, 4.0}) worst = std::max(worst, std::abs(theta(1.0 / x) - std::sqrt(x) * theta(x)));
    os << "max residual " << worst;
    return worst < 1e-12;
  });
  r.check("derivatives match central differences", [](std::ostream& os) {
    double worst = 0.0;
    const double h = 1e-4;
    for (const double x : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, rel(theta_d1(x), (theta(x + h) - theta(x - h)) / (2 * h)));
      worst = std::max(worst, rel(theta_d2(x), (theta_d1(x + h) - theta_d1(x - h)) / (2 * h)));
    }
    os << "max relative error " << worst;
    return worst < 1e-6;
  });
  return r.take();
}

std::vector<CheckResult> besselk_suite() {
  Recorder r("besselk");
  r.check("K_{1/2}(2 pi) = exp(-2 pi) / 2", [](std::ostream& os) {
    const std::complex<double> k = bessel_k({0.5, 0.0}, 2.0 * pi);
    const double want = 0.5 * std::exp(-2.0 * pi);
    os << "relative error " << rel(k.real(), want);
    return rel(k.real(), want) < 1e-12 && k.imag() == 0.0;
  });
  r.check("order symmetry and conjugation at nu = 1, 7, 40", [](std::ostream& os) {
    double worst = 0.0;
    for (const double nu : {1.0, 7.0, 40.0}) {
      const auto k = bessel_k({0.75, nu}, 2.0 * pi);
      const auto conj = bessel_k({0.75, -nu}, 2.0 * pi);
      const auto neg = bessel_k({-0.75, -nu}, 2.0 * pi);
      const double scale = std::abs(k);
      worst = std::max({worst, std::abs(conj - std::conj(k)) / scale, std::abs(neg - k) / scale,
                        std::abs(g_pair(0.75, nu, 2.0 * pi) - 2.0 * k.real()) / scale});
    }
    os << "max relative deviation " << worst;
    return worst < 1e-10;
  });
  return r.take();
}

std::vector<CheckResult> coeffs_suite() {
  Recorder r("coeffs");
  r.check("sinh-power rows sum to zero for k <= 10", [](std::ostream& os) {
    for (int k = 1; k <= 10; ++k) {
      Rational s = 0;
      for (const auto& e : sinh_power_coeffs_exact(k).entries) s += e;
      if (s != 0) {
        os << "row " << k << " sums to " << s;
        return false;
      }
    }
    return true;
  });
  r.check("h and j sum rules at t = 0 (exact)", [](std::ostream& os) {
    const Rational a(1, 3), b(3, 5);
    for (int m = 1; m <= 6; ++m) {
      Rational hs = 0;
      for (const auto& e : h_coeffs_exact(m, a).entries) hs += 2 * e;
      Rational want_h = 1;
      for (int i = 0; i < m; ++i) want_h *= 4 * (1 - a * a);
      Rational js = 0;
      for (const auto& e : j_coeffs_exact(m, a, b).entries) js += 4 * e;
      Rational want_j = 1;
      for (int i = 0; i < m; ++i) want_j *= 16 * a * b;
      if (hs != want_h || js != want_j) {
        os << "m = " << m;
        return false;
      }
    }
    return true;
  });
  r.check("expansions reproduce the kernel factors for m <= 6", [](std::ostream& os) {
    double worst = 0.0;
    for (int m = 1; m <= 6; ++m) {
      const CoeffTable h = h_coeffs(m, 0.4);
      const CoeffTable j = j_coeffs(m, 0.2, 0.7);
      for (const double t : {0.0, 0.37, 1.1, 2.5}) {
        const double ch = std::cosh(t / m);
        const double direct_h = std::cosh(t / 4) * std::pow(4 * ch * ch - 4 * 0.16, m);
        const double sh = std::sinh(t / (2 * m));
        const double direct_j =
            std::cosh(t / 4) * std::pow(4 * sh * sh + 0.8, m) * std::pow(4 * sh * sh + 2.8, m);
        worst = std::max({worst, rel(eval_h_expansion(h, t), direct_h), rel(eval_j_expansion(j, t), direct_j)});
      }
    }
    os << "max relative error " << worst;
    return worst < 1e-10;
  });
  return r.take();
}

std::vector<CheckResult> kernels_suite() {
  Recorder r("kernels");
  const KernelConstants& k = kernel_constants();
  r.check("Phi(0)", [&](std::ostream& os) { return close(os, k.phi0, 0.446696, 1e-6); });
  r.check("beta", [&](std::ostream& os) { return close(os, k.beta, 5.059069, 1e-5); });
  r.check("gamma", [&](std::ostream& os) { return close(os, k.gamma, 0.192369, 1e-5); });
  r.check("delta = 1 + beta", [&](std::ostream& os) {
    return close(os, k.delta, 6.059069, 1e-5) && std::abs(k.delta - 1.0 - k.beta) <= 1e-9;
  });
  r.check("phi_exact is even by direct series", [](std::ostream& os) {
    double worst = 0.0;
    for (const double t : {0.5, 1.0, 2.0}) worst = std::max(worst, std::abs(phi_exact(-t, false) - phi_exact(t, false)));
    os << "max |Phi(-t) - Phi(t)| " << worst;
    return worst < 1e-10;
  });
  r.check("S-family head match at t = 0", [&](std::ostream& os) {
    double worst = 0.0;
    for (const auto& f : {KernelFamily::s1(11), KernelFamily::s2(6, 0.01), KernelFamily::s3(2), KernelFamily::s4(2)}) {
      const double tol = f.tag == FamilyTag::S1 || f.tag == FamilyTag::S2 ? 1e-6 : 1e-4;
      const double d = std::abs(eval_kernel(f, resolve_params(f), 0.0) - k.phi0);
      worst = std::max(worst, d / tol);
    }
    os << "worst deviation / tolerance " << worst;
    return worst <= 1.0;
  });
  r.check("S4 curvature calibration", [&](std::ostream& os) {
    const auto f = KernelFamily::s4(2);
    const auto p = resolve_params(f);
    const double h = 1e-3;
    const double d2 = (eval_kernel(f, p, h) - 2 * eval_kernel(f, p, 0.0) + eval_kernel(f, p, -h)) / (h * h);
    os << "4 K''(0) = " << 4 * d2 << ", phi2_paper = " << k.phi2_paper;
    return rel(4 * d2, k.phi2_paper) < 1e-3;
  });
  r.check("S-family tail |K(3.5)/Phi(3.5) - 1| < 1e-3", [](std::ostream& os) {
    bool ok = true;
    const double phi = phi_exact(3.5);
    for (const auto& f : {KernelFamily::s1(11), KernelFamily::s2(6, 0.01), KernelFamily::s3(2), KernelFamily::s4(2)}) {
      const double ratio = eval_kernel(f, resolve_params(f), 3.5) / phi - 1.0;
      os << f.name() << ": " << ratio << "; ";
      ok = ok && std::abs(ratio) < 1e-3;
    }
    return ok;
  });
  return r.take();
}

std::vector<CheckResult> xi_suite() {
  Recorder r("xi");
  r.check("closed form equals quadrature at w = 0, 5, 20, 60", [](std::ostream& os) {
    double worst = 0.0;
    for (const auto& f : closed_form_families()) {
      const auto p = resolve_params(f);
      for (const double w : {0.0, 5.0, 20.0, 60.0}) {
        const double cf = ft_at(f, p, w, TransformMethod::BesselClosedForm);
        const double q = ft_at(f, p, w, TransformMethod::Quadrature);
        worst = std::max(worst, std::abs(cf - q) / std::max(1.0, std::abs(cf)));
      }
    }
    os << "max scaled deviation " << worst;
    return worst <= 1e-8;
  });
  r.check("int Phi = Xi(0) / 2", [](std::ostream& os) {
    const auto e = KernelFamily::exact();
    const double xi0 = xi_at(e, resolve_params(e), 0.0, TransformMethod::Quadrature);
    return close(os, phi_integral(), xi0 / 2, 1e-9);
  });
  r.check("xi_at is even", [](std::ostream& os) {
    double worst = 0.0;
    for (const auto& f : {KernelFamily::exact(), KernelFamily::s3(2)}) {
      const auto p = resolve_params(f);
      const auto m = default_method(f);
      for (const double z : {3.0, 14.0, 50.0}) worst = std::max(worst, std::abs(xi_at(f, p, -z, m) - xi_at(f, p, z, m)));
    }
    os << "max |Xi(-z) - Xi(z)| " << worst;
    return worst <= 1e-12;
  });
  return r.take();
}

std::vector<CheckResult> zeros_suite() {
  Recorder r("zeros");
  r.check("exact: 29 zeros on (0, 100], first near 14.1347", [](std::ostream& os) {
    const auto e = KernelFamily::exact();
    const ZeroReport rep = locate_zeros(e, resolve_params(e), 0.0, 100.0);
    os << "count " << rep.count << ", first " << (rep.zeros.empty() ? 0.0 : rep.zeros.front());
    return rep.count == 29 && std::abs(rep.zeros.front() - 14.134725) < 1e-3;
  });
  r.check("polya: 29 zeros on (0, 100]", [](std::ostream& os) {
    const auto f = KernelFamily::polya();
    const ZeroReport rep = locate_zeros(f, resolve_params(f), 0.0, 100.0);
    os << "count " << rep.count;
    return rep.count == 29;
  });
  return r.take();
}

std::vector<CheckResult> lp_suite() {
  Recorder r("lp");
  r.check("random increasing sequences have roots in the unit disk", [](std::ostream& os) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> gap(0.01, 2.0);
    std::uniform_int_distribution<int> degree(1, 10);
    for (int trial = 0; trial < 100; ++trial) {
      CoeffSeq s;
      double v = gap(rng);
      for (int k = 0; k <= degree(rng); ++k) {
        s.a.push_back(v);
        v += gap(rng);
      }
      if (!roots_in_unit_disk(s)) {
        os << "trial " << trial << " failed";
        return false;
      }
    }
    return true;
  });
  r.check("trigonometric parts: 2n zeros each, interlacing", [](std::ostream& os) {
    for (const CoeffSeq& s : {CoeffSeq{{1, 2}}, CoeffSeq{{1, 2, 3}}, CoeffSeq{{1, 2, 3, 4, 5}}}) {
      const TrigRootReport rep = trig_realroot_report(s);
      const int n = s.degree();
      if (rep.count_a != 2 * n || rep.count_b != 2 * n || !rep.interlacing) {
        os << "n = " << n << ": counts " << rep.count_a << ", " << rep.count_b;
        return false;
      }
    }
    return true;
  });
  return r.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theta", "besselk", "coeffs", "kernels", "xi", "zeros", "lp"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (name == "theta") return theta_suite();
  if (name == "besselk") return besselk_suite();
  if (name == "coeffs") return coeffs_suite();
  if (name == "kernels") return kernels_suite();
  if (name == "xi") return xi_suite();
  if (name == "zeros") return zeros_suite();
  if (name == "lp") return lp_suite();
  throw PreconditionError("unknown verify suite '" + name + "'");
}

}  // namespace xik
