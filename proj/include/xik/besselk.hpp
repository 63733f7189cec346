#pragma once

// Modified Bessel function of the second kind with complex order c + i nu and
// real argument a > 0, from its integral representation
//   K_{c+i nu}(a) = int_0^inf exp(-a cosh t) cosh((c + i nu) t) dt,
// and the real symmetric pair K_{i nu + c}(a) + K_{i nu - c}(a) that every
// closed-form transform in this library is assembled from.

#include <complex>
#include <span>
#include <vector>

#include "xik/numerics.hpp"

namespace xik {

struct BesselOrder {
  double c = 0.0;   // real part
  double nu = 0.0;  // imaginary part (the transform variable)
};

/// Supported range |c| <= 4, |nu| <= 200.
void validate_order(const BesselOrder& order);

std::complex<double> bessel_k(BesselOrder order, double a, const QuadratureConfig& cfg = {});

/// K_{i nu + c}(a) + K_{i nu - c}(a) = 2 int_0^inf exp(-a cosh t) cosh(c t) cos(nu t) dt,
/// one real integral.
double g_pair(double c, double nu, double a, const QuadratureConfig& cfg = {});

/// g_pair for several orders sharing (nu, a): one pass over the common
/// integration mesh, each order accumulated and convergence-checked on its own.
/// Equal to calling g_pair per order.
std::vector<double> g_pair_batch(std::span<const double> orders, double nu, double a,
                                 const QuadratureConfig& cfg = {});

}  // namespace xik
