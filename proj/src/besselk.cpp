#include "xik/besselk.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xik/errors.hpp"

namespace xik {

namespace {

void validate_argument(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("bessel_k: argument a must be finite and > 0, got " + std::to_string(a));
  }
}

struct OrderTrig {
  double c;
  double cos_cy;
  double sin_cy;
};

// Accumulates int e^{-a cosh z} cosh(c_i z) e^{i nu x} dx over the plan's
// mesh with `splits` subpanels per panel, z = x + i y. Real-axis plans
// (y == 0) use cos(nu x) instead of e^{i nu x}; the imaginary parts vanish.
void sweep(const FourierPlan& plan, const GaussRule& rule, double nu, double a,
           std::span<const OrderTrig> orders, int splits, std::vector<std::complex<double>>& sums,
           std::vector<double>& l1) {
  const double y = plan.shift;
  const double cy = std::cos(y);
  const double sy = std::sin(y);
  const std::size_t k = orders.size();
  std::fill(sums.begin(), sums.end(), std::complex<double>{});
  std::fill(l1.begin(), l1.end(), 0.0);
  std::vector<std::complex<double>> panel(k);
  for (std::size_t p = 0; p + 1 < plan.mesh.size(); ++p) {
    const double width = (plan.mesh[p + 1] - plan.mesh[p]) / splits;
    const double half = 0.5 * width;
    for (int s = 0; s < splits; ++s) {
      const double mid = plan.mesh[p] + s * width + half;
      std::fill(panel.begin(), panel.end(), std::complex<double>{});
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = mid + half * rule.nodes[i];
        const double wgt = rule.weights[i];
        // e^{-a cosh z} e^{i nu x}, cosh z = cosh x cos y + i sinh x sin y
        const double ex = std::exp(x);
        const double chx = 0.5 * (ex + 1.0 / ex);
        const double shx = 0.5 * (ex - 1.0 / ex);
        const double mag = std::exp(-a * chx * cy);
        const double phase = nu * x - a * shx * sy;
        const std::complex<double> env = y == 0.0 ? std::complex<double>(mag * std::cos(nu * x), 0.0)
                                                  : std::polar(mag, phase);
        for (std::size_t j = 0; j < k; ++j) {
          // cosh(c z) = cosh(c x) cos(c y) + i sinh(c x) sin(c y)
          const double ec = std::exp(orders[j].c * x);
          const double ch = 0.5 * (ec + 1.0 / ec);
          const double sh = 0.5 * (ec - 1.0 / ec);
          const std::complex<double> v = env * std::complex<double>(ch * orders[j].cos_cy, sh * orders[j].sin_cy);
          panel[j] += wgt * v;
          l1[j] += wgt * half * std::abs(v);
        }
      }
      for (std::size_t j = 0; j < k; ++j) sums[j] += half * panel[j];
    }
  }
}

}  // namespace

void validate_order(const BesselOrder& order) {
  if (!std::isfinite(order.c) || !std::isfinite(order.nu) || std::abs(order.c) > kMaxGrowth ||
      std::abs(order.nu) > 200.0) {
    throw PreconditionError("bessel_k: order outside supported range |c| <= 4, |nu| <= 200");
  }
}

std::complex<double> bessel_k(BesselOrder order, double a, const QuadratureConfig& cfg) {
  validate_argument(a);
  validate_order(order);
  const double c = order.c;
  const double nu = order.nu;
  const FourierPlan plan = plan_fourier(nu, a, cfg);
  if (plan.shift == 0.0) {
    const QuadratureConfig osc = oscillatory_config(nu, cfg);
    const double re = integrate_semi_infinite(
        [&](double t) { return std::exp(-a * std::cosh(t)) * std::cosh(c * t) * std::cos(nu * t); }, osc);
    const double im = integrate_semi_infinite(
        [&](double t) { return std::exp(-a * std::cosh(t)) * std::sinh(c * t) * std::sin(nu * t); }, osc);
    return {re, im};
  }
  // K = 1/2 int_R e^{-a cosh t} e^{(c + i nu) t} dt on the line Im t = y,
  // y taking the sign of nu so that e^{-nu y} carries the decay.
  const double y = std::copysign(plan.shift, nu);
  const double cy = std::cos(y);
  const double sy = std::sin(y);
  std::vector<double> mesh;
  mesh.reserve(2 * plan.mesh.size());
  for (auto it = plan.mesh.rbegin(); it != plan.mesh.rend(); ++it) {
    if (*it != 0.0) mesh.push_back(-*it);
  }
  mesh.insert(mesh.end(), plan.mesh.begin(), plan.mesh.end());
  auto integrand = [&](double x) {
    const double mag = std::exp(-a * std::cosh(x) * cy + c * x);
    const double phase = nu * x + c * y - a * std::sinh(x) * sy;
    return std::polar(mag, phase);
  };
  QuadratureConfig line_cfg = cfg;
  if (line_cfg.l1_abs_fraction == 0.0) line_cfg.l1_abs_fraction = 1e-14;
  return 0.5 * std::exp(-nu * y) * integrate_mesh(integrand, mesh, line_cfg);
}

std::vector<double> g_pair_batch(std::span<const double> orders, double nu, double a, const QuadratureConfig& cfg) {
  validate_argument(a);
  for (const double c : orders) validate_order({c, nu});
  cfg.validate();
  const double aw = std::abs(nu);
  const FourierPlan plan = plan_fourier(aw, a, cfg);
  const GaussRule rule = gauss_legendre(cfg.nodes_per_panel);

  std::vector<OrderTrig> trig;
  trig.reserve(orders.size());
  for (const double c : orders) trig.push_back({c, std::cos(c * plan.shift), std::sin(c * plan.shift)});

  double l1_fraction = cfg.l1_abs_fraction;
  if (plan.shift != 0.0 && l1_fraction == 0.0) l1_fraction = 1e-14;
  const double scale = plan.shift == 0.0 ? 2.0 : 2.0 * std::exp(-aw * plan.shift);

  const std::size_t k = orders.size();
  std::vector<std::complex<double>> coarse(k), fine(k);
  std::vector<double> l1(k);
  std::vector<double> result(k, 0.0);
  std::vector<bool> done(k, false);
  std::size_t remaining = k;
  sweep(plan, rule, aw, a, trig, 1, coarse, l1);
  for (int h = 1; h <= cfg.max_halvings && remaining > 0; ++h) {
    sweep(plan, rule, aw, a, trig, 1 << h, fine, l1);
    for (std::size_t j = 0; j < k; ++j) {
      if (done[j]) continue;
      const double change = std::abs(fine[j].real() - coarse[j].real());
      const double allowed =
          std::max({cfg.rel_tol * std::abs(fine[j].real()), cfg.abs_tol, l1_fraction * l1[j]});
      if (change <= allowed) {
        result[j] = scale * fine[j].real();
        done[j] = true;
        --remaining;
      }
    }
    coarse.swap(fine);
  }
  if (remaining > 0) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!done[j]) {
        throw NumericalError("g_pair: quadrature did not converge for order " + std::to_string(orders[j]),
                             scale * fine[j].real(), scale * coarse[j].real());
      }
    }
  }
  return result;
}

double g_pair(double c, double nu, double a, const QuadratureConfig& cfg) {
  const double order[1] = {c};
  return g_pair_batch(order, nu, a, cfg)[0];
}

}  // namespace xik
