#pragma once

// Fourier-cosine transforms F(w) = 2 int_0^inf K(t) cos(w t) dt of the kernels,
// so that Xi(z) = F(z/2) for the exact kernel. Two methods: direct quadrature,
// and for every approximating family a finite sum of g-pairs
//   coeff * (K_{iw+c}(a) + K_{iw-c}(a)).

#include <vector>

#include "xik/kernels.hpp"
#include "xik/numerics.hpp"

namespace xik {

enum class TransformMethod { Quadrature, BesselClosedForm };

std::string method_name(TransformMethod m);
TransformMethod parse_method(const std::string& name);

/// One closed-form summand: coeff * g_pair(c, w, a).
struct BesselTerm {
  double coeff = 0.0;
  double c = 0.0;  // >= 0; g_pair is even in c
  double a = 0.0;
};

bool has_closed_form(const KernelFamily& family);

/// The family's kernel as sum coeff * cosh(c t) exp(-a cosh t), with equal
/// (c, a) merged; sorted by (a, c). PreconditionError for Exact.
std::vector<BesselTerm> closed_form_terms(const KernelFamily& family, const ResolvedParams& params);

/// sum coeff * cosh(c t) exp(-a cosh t); reconstructs the kernel from its terms.
double eval_terms(const std::vector<BesselTerm>& terms, double t);

/// F(w). Supported |w| <= 100.
double ft_at(const KernelFamily& family, const ResolvedParams& params, double w, TransformMethod method,
             const QuadratureConfig& cfg = {});

/// Xi-type function at z: ft_at(z / 2).
double xi_at(const KernelFamily& family, const ResolvedParams& params, double z, TransformMethod method,
             const QuadratureConfig& cfg = {});

/// Closed form where available, quadrature otherwise.
TransformMethod default_method(const KernelFamily& family);

/// N(z) = exp(-pi z / 4) (z + 1)^2, the plotting scale for |Xi|. z >= 0.
double normalization(double z);

struct Curve {
  std::vector<double> abscissa;
  std::vector<double> values;
  bool normalized = false;
};

/// Xi-type values on a grid, optionally divided by N(|z|).
Curve xi_curve(const KernelFamily& family, const ResolvedParams& params, std::span<const double> zs,
               TransformMethod method, bool normalize);

/// 100 * int_0^inf |Phi - K| / int_0^inf Phi, in percent.
double rel_l1_diff(const KernelFamily& family, const ResolvedParams& params);

/// int_0^inf Phi(t) dt.
double phi_integral();

}  // namespace xik
