#pragma once

// The Riemann kernel
//   Phi(t) = sum_{n>=1} (2 pi^2 n^4 e^{9t/4} - 3 pi n^2 e^{5t/4}) exp(-pi n^2 e^t),
// whose cosine transform 2 int_0^inf Phi(t) cos(z t) dt is Xi(2z), and the
// kernel families that approximate it:
//
//   Polya      4pi^2 cosh(9t/4) E(t),           E(t) = exp(-2 pi cosh t)
//   Polya2     (4pi^2 cosh(9t/4) - 6pi cosh(5t/4)) E(t)
//   DeBruijn   (4pi^2 cosh(t/4) + (4pi^3 - 6pi) cosh(5t/4) + 4pi^2 cosh(9t/4)) E(t)
//   Hejhal(m)  sum_{n<=m} (4pi^2 n^4 cosh(9t/4) - 6pi n^2 cosh(5t/4)) exp(-2pi n^2 cosh t)
//   S1(m)      4pi^2 E(t) (cosh(9t/4) + b sum_{k<m} (k+1)/(m+1) cosh(9kt/(4m)))
//   S2(m,a)    4pi^2 E(t) (cosh(9t/4) + c sum_{k<m} (1 - a^{k+1}) cosh(9kt/(4m)))
//   S3(m)      4pi^2 E(t) cosh(t/4) (4cosh^2(t/m) - 4a^2)^m
//   S4(m)      4pi^2 E(t) cosh(t/4) (4sinh^2(t/(2m)) + 4a)^m (4sinh^2(t/(2m)) + 4b)^m
//
// The S-family parameters are solved so that each kernel equals Phi at t = 0
// and follows the Polya tail; see resolve_params.

#include <complex>
#include <optional>
#include <string>
#include <utility>

namespace xik {

enum class FamilyTag { Exact, Polya, Polya2, DeBruijn, Hejhal, S1, S2, S3, S4 };

struct KernelFamily {
  FamilyTag tag = FamilyTag::Exact;
  int m = 0;       // Hejhal, S1..S4
  double a = 0.0;  // S2 only

  static KernelFamily exact() { return {FamilyTag::Exact}; }
  static KernelFamily polya() { return {FamilyTag::Polya}; }
  static KernelFamily polya2() { return {FamilyTag::Polya2}; }
  static KernelFamily de_bruijn() { return {FamilyTag::DeBruijn}; }
  static KernelFamily hejhal(int m) { return {FamilyTag::Hejhal, m}; }
  static KernelFamily s1(int m) { return {FamilyTag::S1, m}; }
  static KernelFamily s2(int m, double a) { return {FamilyTag::S2, m, a}; }
  static KernelFamily s3(int m) { return {FamilyTag::S3, m}; }
  static KernelFamily s4(int m) { return {FamilyTag::S4, m}; }

  /// "exact", "hejhal(m=4)", "s2(m=6,a=0.01)", ...
  std::string name() const;
  bool operator==(const KernelFamily&) const = default;
};

/// Lower-case tag used on the command line and in JSON ("s3", "debruijn", ...).
std::string tag_name(FamilyTag tag);
FamilyTag parse_tag(const std::string& name);

/// Constants shared by every family.
struct KernelConstants {
  double phi0 = 0.0;        // Phi(0) = theta''(1) + (3/2) theta'(1)
  double phi2_paper = 0.0;  // 4 Phi''(0): second derivative in the half-argument variable
  double beta = 0.0;        // e^{2pi} Phi(0) / (4pi^2) - 1
  double gamma = 0.0;       // (4 phi2_paper + Phi(0)(32pi - 1)) / (128 Phi(0))
  double delta = 0.0;       // 1 + beta
};

/// Computed once from the series; immutable afterwards.
const KernelConstants& kernel_constants();

struct ResolvedParams {
  KernelFamily family;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double phi0 = 0.0;
  double phi2_paper = 0.0;
  std::optional<double> b;                         // S1
  std::optional<double> c;                         // S2
  std::optional<double> mu;                        // S2
  std::optional<double> a;                         // S3
  std::optional<std::pair<double, double>> a_b;    // S4, a < b

  /// Re-checks every ordering the licensing theorem needs; ParameterError otherwise.
  void validate() const;
};

/// Phi(t) from the series. By default evaluated at |t|, where it converges
/// fastest; reflect = false sums the raw series at negative t.
double phi_exact(double t, bool reflect = true);
/// Series at complex t; Re t < 0 is reflected through Phi(t) = Phi(-t).
std::complex<double> phi_exact(std::complex<double> t);

/// 4 d^2 Phi/dt^2 at 0, from the term-wise differentiated series.
double phi2_paper_at_zero();

/// Unique positive root of mu (1 - a^mu) = beta for 0 < a < 1.
double solve_mu(double a);

/// Solves the family's constants and validates the theorem conditions.
/// Throws ParameterError naming the violated condition.
ResolvedParams resolve_params(const KernelFamily& family);

/// Kernel value; T is double or std::complex<double> (the latter for
/// contour integration). Throws PreconditionError on a family/params mismatch.
template <class T>
T eval_kernel(const KernelFamily& family, const ResolvedParams& params, T t);

extern template double eval_kernel<double>(const KernelFamily&, const ResolvedParams&, double);
extern template std::complex<double> eval_kernel<std::complex<double>>(const KernelFamily&, const ResolvedParams&,
                                                                       std::complex<double>);

}  // namespace xik
