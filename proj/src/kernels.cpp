#include "xik/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xik/errors.hpp"
#include "xik/numerics.hpp"

namespace xik {

using std::numbers::pi;

namespace {

template <class T>
T ipow(T base, int e) {
  T r(1.0);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

double real_part(double v) { return v; }
double real_part(const std::complex<double>& v) { return v.real(); }

// Sum of (2 pi^2 n^4 e^{9t/4} - 3 pi n^2 e^{5t/4}) q^{n^2}, q = exp(-pi e^t).
// q^{n^2} by the recurrence q^{(n+1)^2} = q^{n^2} q^{2n+1}.
template <class T>
T phi_series(T t) {
  const T et = std::exp(t);
  const T q = std::exp(-pi * et);
  const T q2 = q * q;
  const T e9 = std::exp(2.25 * t);
  const T e5 = std::exp(1.25 * t);
  // n^4 q^{n^2} peaks near n^2 = 2 / (pi Re e^t)
  const double peak = std::sqrt(2.0 / (pi * std::max(real_part(et), 1e-300)));
  T sum(0.0);
  double accumulated = 0.0;
  T qn = q;
  T step = q2 * q;
  for (int n = 1; n < 100000; ++n) {
    const double n2 = static_cast<double>(n) * n;
    const T term = (2.0 * pi * pi * n2 * n2 * e9 - 3.0 * pi * n2 * e5) * qn;
    sum += term;
    const double size = std::abs(term);
    accumulated += size;
    if (n > peak && size <= 1e-30 * accumulated) break;
    qn *= step;
    step *= q2;
  }
  return sum;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(7);
  os << v;
  return os.str();
}

void check_family_shape(const KernelFamily& f) {
  switch (f.tag) {
    case FamilyTag::Hejhal:
      if (f.m < 1) throw ParameterError("Hejhal kernel requires m >= 1");
      break;
    case FamilyTag::S1:
      if (f.m < 11) {
        throw ParameterError("Theorem 1 requires m >= 11 (b = 2 beta / m = " +
                             fmt(2.0 * kernel_constants().beta / std::max(f.m, 1)) + " is not < 1)");
      }
      break;
    case FamilyTag::S2:
      if (!(f.a > 0.0 && f.a < 1.0)) throw ParameterError("Theorem 2 requires 0 < a < 1, got a = " + fmt(f.a));
      if (f.m < 1) throw ParameterError("Theorem 2 requires m >= ceil(mu)");
      break;
    case FamilyTag::S3:
    case FamilyTag::S4:
      if (f.m < 1) throw ParameterError("S3/S4 kernels require m >= 1");
      break;
    default:
      break;
  }
}

template <class T>
T envelope(T t, double n2 = 1.0) {
  return std::exp(-2.0 * pi * n2 * std::cosh(t));
}

}  // namespace

std::string tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Exact: return "exact";
    case FamilyTag::Polya: return "polya";
    case FamilyTag::Polya2: return "polya2";
    case FamilyTag::DeBruijn: return "debruijn";
    case FamilyTag::Hejhal: return "hejhal";
    case FamilyTag::S1: return "s1";
    case FamilyTag::S2: return "s2";
    case FamilyTag::S3: return "s3";
    case FamilyTag::S4: return "s4";
  }
  return "?";
}

FamilyTag parse_tag(const std::string& name) {
  for (FamilyTag t : {FamilyTag::Exact, FamilyTag::Polya, FamilyTag::Polya2, FamilyTag::DeBruijn, FamilyTag::Hejhal,
                      FamilyTag::S1, FamilyTag::S2, FamilyTag::S3, FamilyTag::S4}) {
    if (tag_name(t) == name) return t;
  }
  throw PreconditionError("unknown kernel family '" + name + "'");
}

std::string KernelFamily::name() const {
  std::ostringstream os;
  os << tag_name(tag);
  switch (tag) {
    case FamilyTag::Hejhal:
    case FamilyTag::S1:
    case FamilyTag::S3:
    case FamilyTag::S4:
      os << "(m=" << m << ")";
      break;
    case FamilyTag::S2:
      os << "(m=" << m << ",a=" << a << ")";
      break;
    default:
      break;
  }
  return os.str();
}

double phi_exact(double t, bool reflect) { return phi_series(reflect ? std::abs(t) : t); }

std::complex<double> phi_exact(std::complex<double> t) { return phi_series(t.real() < 0.0 ? -t : t); }

double phi2_paper_at_zero() {
  // d^2/dt^2 [e^{alpha t} exp(-c e^t)] at 0 = ((alpha - c)^2 - c) e^{-c}
  double sum = 0.0;
  for (int n = 1; n < 100; ++n) {
    const double n2 = static_cast<double>(n) * n;
    const double c = pi * n2;
    const double e = std::exp(-c);
    const double term = (2.0 * pi * pi * n2 * n2 * ((2.25 - c) * (2.25 - c) - c) -
                         3.0 * pi * n2 * ((1.25 - c) * (1.25 - c) - c)) * e;
    sum += term;
    if (std::abs(term) <= 1e-30 * std::abs(sum)) break;
  }
  return 4.0 * sum;
}

const KernelConstants& kernel_constants() {
  static const KernelConstants constants = [] {
    KernelConstants k;
    k.phi0 = phi_exact(0.0);
    k.phi2_paper = phi2_paper_at_zero();
    k.beta = std::exp(2.0 * pi) * k.phi0 / (4.0 * pi * pi) - 1.0;
    k.delta = 1.0 + k.beta;
    k.gamma = (4.0 * k.phi2_paper + k.phi0 * (32.0 * pi - 1.0)) / (128.0 * k.phi0);
    return k;
  }();
  return constants;
}

double solve_mu(double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("solve_mu: need 0 < a < 1");
  const double beta = kernel_constants().beta;
  auto f = [&](double mu) { return mu * (1.0 - std::pow(a, mu)) - beta; };
  const double lo = beta;
  const double hi = beta / (1.0 - a) + 1.0;
  const Bracket br{lo, hi, f(lo), f(hi)};
  // for tiny a the defining equation is satisfied at beta to working precision
  if (br.f_lo == 0.0) return lo;
  if (!br.valid()) throw NumericalError("solve_mu: root not bracketed", br.f_lo, br.f_hi);
  return find_root(f, br, 1e-13);
}

void ResolvedParams::validate() const {
  const auto fail = [](const std::string& what) { throw ParameterError(what); };
  if (std::abs(delta - (1.0 + beta)) > 1e-9) fail("resolved constants inconsistent: delta != 1 + beta");
  switch (family.tag) {
    case FamilyTag::S1:
      if (!b) fail("S1 parameters missing b");
      if (!(*b > 0.0 && *b < 1.0)) fail("Theorem 1 requires 0 < b < 1, got b = " + fmt(*b));
      break;
    case FamilyTag::S2: {
      if (!c || !mu) fail("S2 parameters missing c or mu");
      if (!(*c > 0.0 && *c < 1.0)) fail("Theorem 2 requires 0 < c < 1, got c = " + fmt(*c));
      if (family.m < static_cast<int>(std::ceil(*mu))) {
        fail("Theorem 2 requires m >= ceil(mu) = " + std::to_string(static_cast<int>(std::ceil(*mu))) +
             ", got m = " + std::to_string(family.m));
      }
      break;
    }
    case FamilyTag::S3:
      if (!a) fail("S3 parameters missing a");
      if (!(*a > 0.0 && *a < 1.0)) fail("Theorem 3 requires 0 < a < 1, got a = " + fmt(*a));
      break;
    case FamilyTag::S4:
      if (!a_b) fail("S4 parameters missing (a, b)");
      if (!(a_b->first > 0.0 && a_b->first < a_b->second && a_b->second < 1.0)) {
        fail("Theorem 4 requires 0 < a < b < 1, got a = " + fmt(a_b->first) + ", b = " + fmt(a_b->second));
      }
      break;
    default:
      break;
  }
}

ResolvedParams resolve_params(const KernelFamily& family) {
  check_family_shape(family);
  const KernelConstants& k = kernel_constants();
  ResolvedParams p;
  p.family = family;
  p.beta = k.beta;
  p.gamma = k.gamma;
  p.delta = k.delta;
  p.phi0 = k.phi0;
  p.phi2_paper = k.phi2_paper;
  const int m = family.m;
  switch (family.tag) {
    case FamilyTag::S1:
      p.b = 2.0 * k.beta / m;
      break;
    case FamilyTag::S2: {
      const double mu = solve_mu(family.a);
      const int need = static_cast<int>(std::ceil(mu));
      if (m < need) {
        throw ParameterError("Theorem 2 requires m >= ceil(mu) = " + std::to_string(need) +
                             " (mu = " + fmt(mu) + "), got m = " + std::to_string(m));
      }
      double geometric = 0.0;
      double power = 1.0;
      for (int i = 1; i <= m; ++i) {
        power *= family.a;
        geometric += power;
      }
      p.mu = mu;
      p.c = k.beta / (m - geometric);
      break;
    }
    case FamilyTag::S3: {
      const double radicand = 1.0 - 0.25 * std::pow(1.0 + k.beta, 1.0 / m);
      if (!(radicand > 0.0)) {
        throw ParameterError("Theorem 3 requires a real 0 < a < 1, but 1 - (1+beta)^{1/m}/4 = " + fmt(radicand) +
                             " < 0 for m = " + std::to_string(m));
      }
      p.a = std::sqrt(radicand);
      break;
    }
    case FamilyTag::S4: {
      const double root = std::pow(k.delta, 1.0 / m);
      const double disc = root * (4.0 * m * m * k.gamma * k.gamma * root - 1.0);
      if (!(disc >= 0.0)) {
        throw ParameterError("Theorem 4 requires real a(m), b(m); they are complex for m = " + std::to_string(m) +
                             " (discriminant " + fmt(disc) + ")");
      }
      const double centre = 0.5 * m * k.gamma * root;
      const double spread = 0.25 * std::sqrt(disc);
      p.a_b = std::make_pair(centre - spread, centre + spread);
      break;
    }
    default:
      break;
  }
  p.validate();
  return p;
}

template <class T>
T eval_kernel(const KernelFamily& family, const ResolvedParams& params, T t) {
  if (!(family == params.family)) {
    throw PreconditionError("eval_kernel: params were resolved for " + params.family.name() + ", not " +
                            family.name());
  }
  const double four_pi2 = 4.0 * pi * pi;
  const int m = family.m;
  switch (family.tag) {
    case FamilyTag::Exact:
      if constexpr (std::is_same_v<T, double>) {
        return phi_exact(t);
      } else {
        return phi_exact(std::complex<double>(t));
      }
    case FamilyTag::Polya:
      return four_pi2 * std::cosh(2.25 * t) * envelope(t);
    case FamilyTag::Polya2:
      return (four_pi2 * std::cosh(2.25 * t) - 6.0 * pi * std::cosh(1.25 * t)) * envelope(t);
    case FamilyTag::DeBruijn:
      return (four_pi2 * std::cosh(0.25 * t) + (4.0 * pi * pi * pi - 6.0 * pi) * std::cosh(1.25 * t) +
              four_pi2 * std::cosh(2.25 * t)) *
             envelope(t);
    case FamilyTag::Hejhal: {
      T sum(0.0);
      const T c9 = std::cosh(2.25 * t);
      const T c5 = std::cosh(1.25 * t);
      for (int n = 1; n <= m; ++n) {
        const double n2 = static_cast<double>(n) * n;
        sum += (four_pi2 * n2 * n2 * c9 - 6.0 * pi * n2 * c5) * envelope(t, n2);
      }
      return sum;
    }
    case FamilyTag::S1:
    case FamilyTag::S2: {
      T body(0.0);
      for (int k = 0; k < m; ++k) {
        const double weight = family.tag == FamilyTag::S1 ? (k + 1.0) / (m + 1.0)
                                                          : 1.0 - std::pow(family.a, k + 1);
        body += weight * std::cosh((2.25 * k / m) * t);
      }
      const double scale = family.tag == FamilyTag::S1 ? *params.b : *params.c;
      return four_pi2 * envelope(t) * (std::cosh(2.25 * t) + scale * body);
    }
    case FamilyTag::S3: {
      const double a = *params.a;
      const T ch = std::cosh(t / static_cast<double>(m));
      return four_pi2 * envelope(t) * std::cosh(0.25 * t) * ipow(T(4.0 * ch * ch - 4.0 * a * a), m);
    }
    case FamilyTag::S4: {
      const auto [a, b] = *params.a_b;
      const T sh = std::sinh(t / (2.0 * m));
      const T s = 4.0 * sh * sh;
      return four_pi2 * envelope(t) * std::cosh(0.25 * t) * ipow(T(s + 4.0 * a), m) * ipow(T(s + 4.0 * b), m);
    }
  }
  throw PreconditionError("eval_kernel: unknown family");
}

template double eval_kernel<double>(const KernelFamily&, const ResolvedParams&, double);
template std::complex<double> eval_kernel<std::complex<double>>(const KernelFamily&, const ResolvedParams&,
                                                                std::complex<double>);

}  // namespace xik
