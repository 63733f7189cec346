#pragma once

// Expansion coefficients that turn the S3/S4 kernel factors into finite sums
// of hyperbolic cosines, hence into finite sums of Bessel pairs:
//
//   sinh^{2k}(x) = sum_{j=0}^{k} a_{k,j} cosh(2 j x)
//   4^m cosh(t/4) (sinh^2(t/m) + 1 - a^2)^m
//       = sum_{j=0}^{m} b_{m,j} (cosh(2jt/m + t/4) + cosh(2jt/m - t/4))
//   cosh(t/4) (4 sinh^2(t/(2m)) + 4a)^m (4 sinh^2(t/(2m)) + 4b)^m
//       = sum_{j,l=0}^{m} d_{m,j,l} p_{m,j,l}(t),
//   p_{m,j,l}(t) = 4 cosh(t/4) cosh(jt/m) cosh(lt/m)
//                = sum over sign pairs of cosh(t/4 + (+-j +-l) t/m).
//
// Every table exists in a double flavour and an exact rational flavour; the
// binomials are exact integers in both.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace xik {

using Rational = boost::multiprecision::cpp_rational;

enum class CoeffKind { SinhPower, H, J };

template <class T>
struct BasicCoeffTable {
  CoeffKind kind = CoeffKind::SinhPower;
  int order = 0;  // k for SinhPower, m otherwise
  T a{};          // H, J
  T b{};          // J only
  std::vector<T> entries;  // a_{k,j} / b_{m,j} by j; d_{m,j,l} row-major (j, l)

  std::size_t width() const { return static_cast<std::size_t>(order) + 1; }
  const T& at(int j) const { return entries.at(static_cast<std::size_t>(j)); }
  const T& at(int j, int l) const { return entries.at(static_cast<std::size_t>(j) * width() + l); }
};

using CoeffTable = BasicCoeffTable<double>;
using ExactCoeffTable = BasicCoeffTable<Rational>;

inline constexpr int kMaxCoeffOrder = 64;

/// a_{k,j}, 1 <= k <= 64.
CoeffTable sinh_power_coeffs(int k);
ExactCoeffTable sinh_power_coeffs_exact(int k);

/// b_{m,j} = 1/2 4^m sum_{k=j}^{m} C(m,k) (1-a^2)^{m-k} a_{k,j}; m >= 1, 0 <= a < 1.
CoeffTable h_coeffs(int m, double a);
ExactCoeffTable h_coeffs_exact(int m, const Rational& a);

/// d_{m,j,l} = 4^{2m-1} sum_{k>=j} sum_{n>=l} C(m,k) C(m,n) a^{m-k} b^{m-n} a_{k,j} a_{n,l};
/// m >= 1, a > 0, b > 0.
CoeffTable j_coeffs(int m, double a, double b);
ExactCoeffTable j_coeffs_exact(int m, const Rational& a, const Rational& b);

CoeffTable to_double(const ExactCoeffTable& exact);

/// sum_j a_{k,j} cosh(2 j x)
double eval_sinh_power(const CoeffTable& table, double x);
/// sum_j b_{m,j} (cosh(2jt/m + t/4) + cosh(2jt/m - t/4))
double eval_h_expansion(const CoeffTable& table, double t);
/// sum_{j,l} d_{m,j,l} p_{m,j,l}(t)
double eval_j_expansion(const CoeffTable& table, double t);
/// The four-cosh form of p_{m,j,l}(t).
double p_four_cosh(int m, int j, int l, double t);

}  // namespace xik
