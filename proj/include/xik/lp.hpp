#pragma once

// Finite numeric certificates for polynomials with positive increasing
// coefficients p(z) = sum a_k z^k (Enestrom-Kakeya: all roots in |z| <= 1) and
// for the real and imaginary parts of p(e^{i alpha}),
//   A(alpha) = sum_k a_k cos(k alpha),  B(alpha) = sum_{k>=1} a_k sin(k alpha),
// which then have 2n real zeros each per period, interlacing.

#include <complex>
#include <vector>

namespace xik {

struct CoeffSeq {
  std::vector<double> a;  // a_0 ... a_n

  /// PreconditionError unless length >= 2 and all finite.
  void validate() const;
  int degree() const { return static_cast<int>(a.size()) - 1; }
};

/// 0 < a_0 < a_1 < ... < a_n.
bool ek_applies(const CoeffSeq& s);

/// All n roots by Aberth-Ehrlich simultaneous iteration. n <= 64, a_n != 0.
std::vector<std::complex<double>> polynomial_roots(const CoeffSeq& s);

/// max |root| <= 1 + 1e-9.
bool roots_in_unit_disk(const CoeffSeq& s);

struct TrigRootReport {
  std::vector<double> a_zeros;  // zeros of A in [0, 2 pi), ascending
  std::vector<double> b_zeros;  // zeros of B in [0, 2 pi), ascending (0 and pi included)
  int count_a = 0;
  int count_b = 0;
  bool interlacing = false;  // merged zeros alternate A, B, A, B ... around the circle
};

inline constexpr int kTrigScanCells = 4096;

/// Dense scan with kTrigScanCells cells plus bracket refinement.
/// Requires ek_applies(s) and n <= 32. NumericalError if two zeros of the same
/// function fall within one cell.
TrigRootReport trig_realroot_report(const CoeffSeq& s, int cells = kTrigScanCells);

/// {b b_0, ..., b b_{m-1}, 1} with b_k = (k+1)/(m+1): the cosine
/// coefficients of the S1 kernel's bracketed sum, in increasing order.
CoeffSeq s1_cosine_sequence(int m, double b);

}  // namespace xik
