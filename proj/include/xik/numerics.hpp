#pragma once

// Shared numerical engines: fixed-order panel quadrature with global halving
// convergence, Fourier-cosine transforms of doubly exponentially decaying
// kernels, bracketed root refinement and sign-change scanning.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <sstream>
#include <type_traits>
#include <vector>

#include "xik/errors.hpp"

namespace xik {

struct QuadratureConfig {
  double truncation_upper = 4.5;  // integrate [0, T]; 2*pi*cosh(4.5) ~ 283
  double panel_width_cap = 0.25;
  int nodes_per_panel = 16;
  double rel_tol = 1e-12;
  double abs_tol = 1e-16;
  // Also accept |change| <= l1_abs_fraction * int|f|. Lets the halving test
  // converge where the integral itself cancels to ~0 (transforms at a zero).
  double l1_abs_fraction = 0.0;
  int max_halvings = 6;

  void validate() const;
};

/// Config for integrating f(t) cos(w t): each panel spans at most 1/8 of an
/// oscillation period.
QuadratureConfig oscillatory_config(double w, QuadratureConfig base = {});

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// Gauss-Legendre rule of order n, nodes by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

/// Breakpoints lo = x_0 < ... < x_k = hi with equal panels no wider than width_cap.
std::vector<double> uniform_mesh(double lo, double hi, double width_cap);

namespace detail {

template <class R>
double magnitude(const R& v) {
  return std::abs(v);
}

template <class F, class R>
R panel_sum(F& f, std::span<const double> mesh, int splits, const GaussRule& rule, double& l1) {
  R total{};
  l1 = 0.0;
  const std::size_t n = rule.nodes.size();
  for (std::size_t p = 0; p + 1 < mesh.size(); ++p) {
    const double width = (mesh[p + 1] - mesh[p]) / splits;
    for (int s = 0; s < splits; ++s) {
      const double lo = mesh[p] + s * width;
      const double half = 0.5 * width;
      const double mid = lo + half;
      R panel{};
      for (std::size_t i = 0; i < n; ++i) {
        const R v = f(mid + half * rule.nodes[i]);
        panel += rule.weights[i] * v;
        l1 += rule.weights[i] * half * magnitude(v);
      }
      total += half * panel;
    }
  }
  return total;
}

}  // namespace detail

/// Composite Gauss-Legendre quadrature over the given breakpoints. All panels
/// are halved until two successive estimates agree to
/// max(rel_tol*|I|, abs_tol, l1_abs_fraction*int|f|).
/// Throws NumericalError carrying the last two estimates otherwise.
template <class F>
auto integrate_mesh(F&& f, std::span<const double> mesh, const QuadratureConfig& cfg)
    -> std::invoke_result_t<F&, double> {
  using R = std::invoke_result_t<F&, double>;
  cfg.validate();
  if (mesh.size() < 2) throw PreconditionError("integrate_mesh: need at least two breakpoints");
  for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
    if (!(mesh[i] < mesh[i + 1])) throw PreconditionError("integrate_mesh: breakpoints must increase");
  }
  const GaussRule rule = gauss_legendre(cfg.nodes_per_panel);
  double l1 = 0.0;
  R coarse = detail::panel_sum<F, R>(f, mesh, 1, rule, l1);
  R fine = coarse;
  for (int h = 1; h <= cfg.max_halvings; ++h) {
    fine = detail::panel_sum<F, R>(f, mesh, 1 << h, rule, l1);
    const double change = detail::magnitude(R(fine - coarse));
    const double allowed =
        std::max({cfg.rel_tol * detail::magnitude(fine), cfg.abs_tol, cfg.l1_abs_fraction * l1});
    if (!std::isfinite(change)) break;
    if (change <= allowed) return fine;
    if (h < cfg.max_halvings) coarse = fine;
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "quadrature did not converge after " << cfg.max_halvings << " halvings (last estimates "
      << detail::magnitude(coarse) << ", " << detail::magnitude(fine) << ")";
  throw NumericalError(msg.str(), detail::magnitude(coarse), detail::magnitude(fine));
}

template <class F>
auto integrate_interval(F&& f, double lo, double hi, const QuadratureConfig& cfg) {
  if (!(lo < hi)) throw PreconditionError("integrate_interval: need lo < hi");
  const auto mesh = uniform_mesh(lo, hi, cfg.panel_width_cap);
  return integrate_mesh(std::forward<F>(f), mesh, cfg);
}

/// int_0^inf f(t) dt for f decaying doubly exponentially; the tail beyond
/// cfg.truncation_upper is assumed below abs_tol.
template <class F>
auto integrate_semi_infinite(F&& f, const QuadratureConfig& cfg) {
  cfg.validate();
  return integrate_interval(std::forward<F>(f), 0.0, cfg.truncation_upper, cfg);
}

// ---------------------------------------------------------------------------
// Fourier-cosine transforms of kernels with an exp(-a cosh t) envelope.

/// Integration line for F(w) = 2 int_0^inf K(t) cos(w t) dt.
///
/// For |w| <= 6/pi the real axis is used with the oscillatory panel cap. For
/// larger |w| the contour is moved to Im t = pi/2 - 3/|w|: the transform is
/// ~exp(-pi|w|/2) while K is O(1) on the real axis, so real-axis quadrature
/// cannot resolve it in double precision. On the shifted line the integrand
/// is of the size of the result.
struct FourierPlan {
  double shift = 0.0;             // Im t of the integration line
  std::vector<double> mesh;       // breakpoints in Re t, starting at 0
};

inline constexpr double kContourOffset = 3.0;
/// Largest order growth exp(c|t|) the plans allow for.
inline constexpr double kMaxGrowth = 4.0;

FourierPlan plan_fourier(double w, double decay, const QuadratureConfig& cfg);

/// F(w) = 2 int_0^inf K(t) cos(w t) dt for K even, real on the real axis,
/// analytic in |Im t| < pi/2, with |K(x+iy)| <~ exp(c|x| - decay cos(y) cosh x).
/// `kernel` is called with double on the real-axis path and with
/// std::complex<double> on the shifted path.
template <class K>
double fourier_cosine(K&& kernel, double w, double decay, QuadratureConfig cfg) {
  const double aw = std::abs(w);
  const FourierPlan plan = plan_fourier(aw, decay, cfg);
  if (plan.shift == 0.0) {
    auto integrand = [&](double t) -> double { return kernel(t) * std::cos(aw * t); };
    return 2.0 * integrate_mesh(integrand, plan.mesh, cfg);
  }
  // The integrand h(x) = K(x+iy) e^{i w (x+iy)} satisfies h(-x) = conj(h(x)),
  // so the line integral is 2 Re int_0^inf.
  const double y = plan.shift;
  const std::complex<double> ei(0.0, 1.0);
  auto integrand = [&](double x) -> std::complex<double> {
    const std::complex<double> t(x, y);
    return kernel(t) * std::exp(ei * (aw * x));
  };
  if (cfg.l1_abs_fraction == 0.0) cfg.l1_abs_fraction = 1e-14;
  const std::complex<double> line = integrate_mesh(integrand, plan.mesh, cfg);
  return 2.0 * std::exp(-aw * y) * line.real();
}

// ---------------------------------------------------------------------------
// Roots.

/// Strictly opposite signs, immune to underflow of the product.
inline bool opposite_signs(double u, double v) { return (u < 0.0 && v > 0.0) || (u > 0.0 && v < 0.0); }

/// [lo, hi] with f(lo) f(hi) < 0, or a degenerate lo == hi where f is exactly 0.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;

  bool degenerate() const { return lo == hi && f_lo == 0.0; }
  bool valid() const { return degenerate() || (lo < hi && opposite_signs(f_lo, f_hi)); }
};

enum class RootMethod { Brent, Bisection };

/// Refines a bracketed root until the bracket is no wider than tol.
/// Brent's method (inverse quadratic / secant steps with a bisection
/// fallback) by default; plain bisection on request.
double find_root(const std::function<double(double)>& f, const Bracket& b, double tol,
                 RootMethod method = RootMethod::Brent);

/// Grid lo, lo+step, ..., ending exactly at hi.
std::vector<double> scan_grid(double lo, double hi, double step);

/// Brackets from precomputed samples: one per strict sign change between
/// neighbours, a degenerate bracket for every sample that is exactly 0.
/// A zero at xs.front() is not reported (half-open interval (lo, hi]).
std::vector<Bracket> sign_changes(std::span<const double> xs, std::span<const double> values);

std::vector<Bracket> scan_sign_changes(const std::function<double(double)>& f, double lo, double hi,
                                       double step);

}  // namespace xik
