#include "xik/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace xik {

using std::numbers::pi;

void QuadratureConfig::validate() const {
  if (!(truncation_upper > 0.0)) throw PreconditionError("QuadratureConfig: truncation_upper must be > 0");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) throw PreconditionError("QuadratureConfig: need 0 < rel_tol <= 1e-6");
  if (nodes_per_panel < 8) throw PreconditionError("QuadratureConfig: nodes_per_panel must be >= 8");
  if (!(panel_width_cap > 0.0)) throw PreconditionError("QuadratureConfig: panel_width_cap must be > 0");
  if (!(abs_tol >= 0.0) || !(l1_abs_fraction >= 0.0)) {
    throw PreconditionError("QuadratureConfig: tolerances must be non-negative");
  }
  if (max_halvings < 1 || max_halvings > 20) throw PreconditionError("QuadratureConfig: max_halvings in [1, 20]");
}

QuadratureConfig oscillatory_config(double w, QuadratureConfig base) {
  base.panel_width_cap = std::min(base.panel_width_cap, pi / (4.0 * std::max(std::abs(w), 1.0)));
  return base;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw PreconditionError("gauss_legendre: order must be >= 1");
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

std::vector<double> uniform_mesh(double lo, double hi, double width_cap) {
  if (!(lo < hi)) throw PreconditionError("uniform_mesh: need lo < hi");
  if (!(width_cap > 0.0)) throw PreconditionError("uniform_mesh: width cap must be > 0");
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((hi - lo) / width_cap - 1e-12)));
  std::vector<double> mesh(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) {
    mesh[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(panels);
  }
  mesh.back() = hi;
  return mesh;
}

FourierPlan plan_fourier(double w, double decay, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(decay > 0.0)) throw PreconditionError("plan_fourier: decay must be > 0");
  const double aw = std::abs(w);
  FourierPlan plan;
  plan.shift = std::max(0.0, pi / 2.0 - kContourOffset / std::max(aw, 1e-300));
  if (plan.shift == 0.0) {
    plan.mesh = uniform_mesh(0.0, cfg.truncation_upper, oscillatory_config(aw, cfg).panel_width_cap);
    return plan;
  }
  // Cut where the envelope exp(kMaxGrowth x - decay cos(y) (cosh x - 1)) is
  // below exp(-41) relative to its value at x = 0.
  const double damping = decay * std::cos(plan.shift);
  double cut = cfg.truncation_upper;
  while (damping * (std::cosh(cut) - 1.0) - kMaxGrowth * cut < 41.0) cut += 0.05;

  // One oscillation of the line integrand per panel; its phase advances at
  // about |w| + decay sin(y) sinh(x).
  const double spin = decay * std::sin(plan.shift);
  auto rate = [&](double x) { return std::max(1.0, aw + spin * std::sinh(x)); };
  plan.mesh.push_back(0.0);
  double x = 0.0;
  while (x < cut) {
    const double guess = std::min(cfg.panel_width_cap, 2.0 * pi / rate(x));
    double h = std::min(cfg.panel_width_cap, 2.0 * pi / rate(x + guess));
    if (x + h >= cut || cut - (x + h) < 0.25 * h) h = cut - x;
    x += h;
    plan.mesh.push_back(x);
  }
  plan.mesh.back() = cut;
  return plan;
}

double find_root(const std::function<double(double)>& f, const Bracket& b, double tol, RootMethod method) {
  if (!b.valid()) throw PreconditionError("find_root: invalid bracket (need lo < hi and f(lo) f(hi) < 0)");
  if (!(tol > 0.0)) throw PreconditionError("find_root: tol must be > 0");
  if (b.degenerate()) return b.lo;

  constexpr int kMaxIter = 400;
  if (method == RootMethod::Bisection) {
    double lo = b.lo, hi = b.hi, flo = b.f_lo;
    for (int it = 0; it < kMaxIter; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo <= tol || mid == lo || mid == hi) return mid;
      const double fm = f(mid);
      if (fm == 0.0) return mid;
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    throw NumericalError("find_root: bisection did not converge", lo, hi);
  }

  // Brent: b is the best estimate, [b, c] always brackets the root.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double a = b.lo, fa = b.f_lo;
  double x = b.hi, fx = b.f_hi;
  double c = a, fc = fa;
  double d = x - a, e = d;
  for (int it = 0; it < kMaxIter; ++it) {
    if ((fx > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = x - a;
    }
    if (std::abs(fc) < std::abs(fx)) {
      a = x; x = c; c = a;
      fa = fx; fx = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(x) + 0.25 * tol;
    const double xm = 0.5 * (c - x);
    if (std::abs(c - x) <= std::max(tol, 4.0 * eps * std::abs(x)) || fx == 0.0) return x;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fx)) {
      double p, q;
      const double s = fx / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fx / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (x - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = x;
    fa = fx;
    x += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fx = f(x);
  }
  throw NumericalError("find_root: Brent iteration did not converge", x, c);
}

std::vector<double> scan_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw PreconditionError("scan: step must be > 0");
  if (!(lo < hi)) throw PreconditionError("scan: need lo < hi");
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step - 1e-9));
  std::vector<double> xs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) xs[i] = lo + static_cast<double>(i) * step;
  xs.back() = hi;
  return xs;
}

std::vector<Bracket> sign_changes(std::span<const double> xs, std::span<const double> values) {
  if (xs.size() != values.size()) throw PreconditionError("sign_changes: size mismatch");
  std::vector<Bracket> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && values[i] == 0.0) out.push_back({xs[i], xs[i], 0.0, 0.0});
    if (i + 1 < xs.size() && opposite_signs(values[i], values[i + 1])) {
      out.push_back({xs[i], xs[i + 1], values[i], values[i + 1]});
    }
  }
  return out;
}

std::vector<Bracket> scan_sign_changes(const std::function<double(double)>& f, double lo, double hi,
                                       double step) {
  const auto xs = scan_grid(lo, hi, step);
  std::vector<double> values(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) values[i] = f(xs[i]);
  return sign_changes(xs, values);
}

}  // namespace xik
