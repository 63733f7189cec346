#include "xik/coeffs.hpp"

#include <cmath>
#include <string>

#include "xik/errors.hpp"

namespace xik {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// a_{k,j} = s * C(2k, k-j) / 2^{2k-1}, with the j = 0 entry halved.
Rational sinh_power_exact(int k, int j) {
  Rational v(binomial(2 * k, k - j));
  v /= Rational(cpp_int(1) << (2 * k - 1));
  if (j == 0) v /= 2;
  if ((k - j) % 2 != 0) v = -v;
  return v;
}

double to_real(const Rational& r) { return r.convert_to<double>(); }

template <class T>
T from_exact(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return to_real(r);
  }
}

template <class T>
T ipow(const T& base, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_order(int m, const char* what) {
  if (m < 1 || m > kMaxCoeffOrder) {
    throw DomainError(std::string(what) + ": order must be in [1, 64], got " + std::to_string(m));
  }
}

template <class T>
BasicCoeffTable<T> sinh_power_table(int k) {
  check_order(k, "sinh_power_coeffs");
  BasicCoeffTable<T> t;
  t.kind = CoeffKind::SinhPower;
  t.order = k;
  t.entries.reserve(k + 1);
  for (int j = 0; j <= k; ++j) t.entries.push_back(from_exact<T>(sinh_power_exact(k, j)));
  return t;
}

template <class T>
BasicCoeffTable<T> h_table(int m, const T& a) {
  check_order(m, "h_coeffs");
  if (!(a >= 0 && a < 1)) throw DomainError("h_coeffs: need 0 <= a < 1");
  BasicCoeffTable<T> t;
  t.kind = CoeffKind::H;
  t.order = m;
  t.a = a;
  const T one_minus = T(1) - a * a;
  const T half_four_m = T(cpp_int(1) << (2 * m)) / T(2);
  for (int j = 0; j <= m; ++j) {
    T sum(0);
    for (int k = std::max(j, 0); k <= m; ++k) {
      if (k == 0) {
        // sinh^0 = 1 = cosh(0): a_{0,0} = 1
        sum += T(binomial(m, 0)) * ipow(one_minus, m);
        continue;
      }
      sum += T(binomial(m, k)) * ipow(one_minus, m - k) * from_exact<T>(sinh_power_exact(k, j));
    }
    t.entries.push_back(half_four_m * sum);
  }
  return t;
}

template <class T>
BasicCoeffTable<T> j_table(int m, const T& a, const T& b) {
  check_order(m, "j_coeffs");
  if (!(a > 0) || !(b > 0)) throw DomainError("j_coeffs: need a > 0 and b > 0");
  BasicCoeffTable<T> t;
  t.kind = CoeffKind::J;
  t.order = m;
  t.a = a;
  t.b = b;
  // Row sums over k of C(m,k) x^{m-k} a_{k,j}, shared by both factors.
  auto factor = [m](const T& x) {
    std::vector<T> row(m + 1, T(0));
    for (int j = 0; j <= m; ++j) {
      for (int k = j; k <= m; ++k) {
        const T akj = k == 0 ? T(1) : from_exact<T>(sinh_power_exact(k, j));
        row[j] += T(binomial(m, k)) * ipow(x, m - k) * akj;
      }
    }
    return row;
  };
  const std::vector<T> fa = factor(a);
  const std::vector<T> fb = factor(b);
  const T scale = T(cpp_int(1) << (4 * m - 2));  // 4^{2m-1}
  t.entries.reserve((m + 1) * (m + 1));
  for (int j = 0; j <= m; ++j) {
    for (int l = 0; l <= m; ++l) t.entries.push_back(scale * fa[j] * fb[l]);
  }
  return t;
}

}  // namespace

CoeffTable sinh_power_coeffs(int k) { return sinh_power_table<double>(k); }
ExactCoeffTable sinh_power_coeffs_exact(int k) { return sinh_power_table<Rational>(k); }

CoeffTable h_coeffs(int m, double a) {
  if (!std::isfinite(a)) throw DomainError("h_coeffs: a must be finite");
  return h_table<double>(m, a);
}
ExactCoeffTable h_coeffs_exact(int m, const Rational& a) { return h_table<Rational>(m, a); }

CoeffTable j_coeffs(int m, double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("j_coeffs: a, b must be finite");
  return j_table<double>(m, a, b);
}
ExactCoeffTable j_coeffs_exact(int m, const Rational& a, const Rational& b) { return j_table<Rational>(m, a, b); }

CoeffTable to_double(const ExactCoeffTable& exact) {
  CoeffTable t;
  t.kind = exact.kind;
  t.order = exact.order;
  t.a = to_real(exact.a);
  t.b = to_real(exact.b);
  t.entries.reserve(exact.entries.size());
  for (const auto& e : exact.entries) t.entries.push_back(to_real(e));
  return t;
}

double eval_sinh_power(const CoeffTable& table, double x) {
  double s = 0.0;
  for (int j = 0; j <= table.order; ++j) s += table.at(j) * std::cosh(2.0 * j * x);
  return s;
}

double eval_h_expansion(const CoeffTable& table, double t) {
  const double m = table.order;
  double s = 0.0;
  for (int j = 0; j <= table.order; ++j) {
    s += table.at(j) * (std::cosh(2.0 * j * t / m + t / 4.0) + std::cosh(2.0 * j * t / m - t / 4.0));
  }
  return s;
}

double p_four_cosh(int m, int j, int l, double t) {
  const double q = t / m;
  const double base = t / 4.0;
  return std::cosh(base + (j + l) * q) + std::cosh(base + (j - l) * q) + std::cosh(base + (-j + l) * q) +
         std::cosh(base + (-j - l) * q);
}

double eval_j_expansion(const CoeffTable& table, double t) {
  double s = 0.0;
  for (int j = 0; j <= table.order; ++j) {
    for (int l = 0; l <= table.order; ++l) s += table.at(j, l) * p_four_cosh(table.order, j, l, t);
  }
  return s;
}

}  // namespace xik
