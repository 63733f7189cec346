#include "xik/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "xik/errors.hpp"
#include "xik/numerics.hpp"

namespace xik {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct HornerEval {
  std::complex<double> p;
  std::complex<double> dp;
};

HornerEval horner(const std::vector<double>& a, std::complex<double> z) {
  std::complex<double> p = a.back();
  std::complex<double> dp = 0.0;
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
  return {p, dp};
}

// A (cosine part) or B (sine part) and its derivative.
std::pair<double, double> trig_eval(const std::vector<double>& a, bool sine, double alpha) {
  double f = 0.0;
  double df = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double c = std::cos(k * alpha);
    const double s = std::sin(k * alpha);
    if (sine) {
      f += a[k] * s;
      df += a[k] * k * c;
    } else {
      f += a[k] * c;
      df -= a[k] * k * s;
    }
  }
  return {f, df};
}

std::vector<double> trig_zeros(const std::vector<double>& a, bool sine, int cells, double snap) {
  const char* name = sine ? "B" : "A";
  const double h = kTwoPi / cells;
  std::vector<double> f(cells + 1), df(cells + 1);
  for (int i = 0; i < cells; ++i) {
    std::tie(f[i], df[i]) = trig_eval(a, sine, i * h);
    if (std::abs(f[i]) <= snap) f[i] = 0.0;
  }
  f[cells] = f[0];
  df[cells] = df[0];
  auto value = [&](double x) { return trig_eval(a, sine, x).first; };
  auto slope = [&](double x) { return trig_eval(a, sine, x).second; };

  std::vector<double> zeros;
  for (int i = 0; i < cells; ++i) {
    const double lo = i * h;
    const double hi = i + 1 == cells ? kTwoPi : (i + 1) * h;
    if (f[i] == 0.0) {
      if (i > 0 && f[i - 1] == 0.0) {
        throw NumericalError(std::string("trig scan: ") + name + " vanishes on two adjacent samples near alpha = " +
                             std::to_string(lo) + "; use a finer step");
      }
      zeros.push_back(lo);
      continue;
    }
    if (f[i + 1] == 0.0) continue;
    if (opposite_signs(f[i], f[i + 1])) {
      zeros.push_back(find_root(value, {lo, hi, f[i], f[i + 1]}, 1e-15));
      continue;
    }
    // Same sign at both ends: an interior extremum of the opposite sign
    // would hide two zeros in this cell.
    if (opposite_signs(df[i], df[i + 1])) {
      const double peak = find_root(slope, {lo, hi, df[i], df[i + 1]}, 1e-15);
      const double fp = value(peak);
      if (std::abs(fp) > snap && opposite_signs(fp, f[i])) {
        throw NumericalError(std::string("trig scan: two zeros of ") + name + " in one cell near alpha = " +
                             std::to_string(peak) + "; use a finer step");
      }
    }
  }
  return zeros;
}

}  // namespace

void CoeffSeq::validate() const {
  if (a.size() < 2) throw PreconditionError("CoeffSeq: need at least two coefficients");
  for (const double v : a) {
    if (!std::isfinite(v)) throw PreconditionError("CoeffSeq: coefficients must be finite");
  }
}

bool ek_applies(const CoeffSeq& s) {
  if (s.a.empty() || !(s.a.front() > 0.0)) return false;
  for (std::size_t k = 1; k < s.a.size(); ++k) {
    if (!(s.a[k] > s.a[k - 1])) return false;
  }
  return true;
}

std::vector<std::complex<double>> polynomial_roots(const CoeffSeq& s) {
  s.validate();
  const int n = s.degree();
  if (n > 64) throw PreconditionError("polynomial_roots: degree must be <= 64");
  if (s.a.back() == 0.0) throw PreconditionError("polynomial_roots: leading coefficient is zero");
  // start on a circle whose radius is the geometric mean of the root moduli
  const double radius = std::max(std::pow(std::abs(s.a.front() / s.a.back()), 1.0 / n), 1e-3);
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(radius, kTwoPi * i / n + 0.4);

  for (int iter = 0; iter < 500; ++iter) {
    double largest = 0.0;
    for (int i = 0; i < n; ++i) {
      const HornerEval e = horner(s.a, z[i]);
      if (e.p == 0.0) continue;
      const std::complex<double> ratio = e.p / e.dp;
      std::complex<double> repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const std::complex<double> step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      largest = std::max(largest, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (largest <= 1e-14) {
      std::sort(z.begin(), z.end(), [](auto u, auto v) {
        return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
      });
      return z;
    }
  }
  throw NumericalError("polynomial_roots: Aberth iteration did not converge in 500 sweeps");
}

bool roots_in_unit_disk(const CoeffSeq& s) {
  double largest = 0.0;
  for (const auto& r : polynomial_roots(s)) largest = std::max(largest, std::abs(r));
  return largest <= 1.0 + 1e-9;
}

TrigRootReport trig_realroot_report(const CoeffSeq& s, int cells) {
  s.validate();
  if (!ek_applies(s)) throw PreconditionError("trig_realroot_report: need 0 < a_0 < a_1 < ... < a_n");
  if (s.degree() > 32) throw PreconditionError("trig_realroot_report: degree must be <= 32");
  if (cells < 8) throw PreconditionError("trig_realroot_report: need at least 8 cells");
  double total = 0.0;
  for (const double v : s.a) total += std::abs(v);
  const double snap = 1e-12 * total;

  TrigRootReport r;
  r.a_zeros = trig_zeros(s.a, false, cells, snap);
  r.b_zeros = trig_zeros(s.a, true, cells, snap);
  r.count_a = static_cast<int>(r.a_zeros.size());
  r.count_b = static_cast<int>(r.b_zeros.size());

  std::vector<std::pair<double, int>> merged;
  for (const double z : r.a_zeros) merged.emplace_back(z, 0);
  for (const double z : r.b_zeros) merged.emplace_back(z, 1);
  std::sort(merged.begin(), merged.end());
  r.interlacing = r.count_a == r.count_b && r.count_a > 0;
  for (std::size_t i = 0; r.interlacing && i < merged.size(); ++i) {
    const auto& next = merged[(i + 1) % merged.size()];
    if (merged[i].second == next.second) r.interlacing = false;
    if (i + 1 < merged.size() && next.first - merged[i].first <= 1e-12) r.interlacing = false;
  }
  return r;
}

CoeffSeq s1_cosine_sequence(int m, double b) {
  if (m < 1) throw PreconditionError("s1_cosine_sequence: need m >= 1");
  CoeffSeq s;
  for (int k = 0; k < m; ++k) s.a.push_back(b * (k + 1.0) / (m + 1.0));
  s.a.push_back(1.0);
  return s;
}

}  // namespace xik
