#include "xik/xi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "xik/besselk.hpp"
#include "xik/coeffs.hpp"
#include "xik/errors.hpp"
#include "xik/parallel.hpp"

namespace xik {

using std::numbers::pi;

namespace {

constexpr double kTwoPi = 2.0 * pi;

// Merges terms sharing (|c|, a); keys are rounded so that 2j/m - 1/4 and
// 1/4 + (j-l)/m style duplicates computed along different paths coincide.
class TermCollector {
 public:
  void add(double coeff, double c, double a) {
    const auto key = std::make_pair(std::llround(a * 1e9), std::llround(std::abs(c) * 1e12));
    auto [it, inserted] = terms_.try_emplace(key, BesselTerm{0.0, std::abs(c), a});
    it->second.coeff += coeff;
  }

  std::vector<BesselTerm> take() const {
    std::vector<BesselTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, term] : terms_) {
      if (term.coeff != 0.0) out.push_back(term);
    }
    return out;
  }

 private:
  std::map<std::pair<long long, long long>, BesselTerm> terms_;
};

void check_params(const KernelFamily& family, const ResolvedParams& params) {
  if (!(family == params.family)) {
    throw PreconditionError("params were resolved for " + params.family.name() + ", not " + family.name());
  }
}

}  // namespace

std::string method_name(TransformMethod m) {
  return m == TransformMethod::Quadrature ? "quadrature" : "closed";
}

TransformMethod parse_method(const std::string& name) {
  if (name == "quadrature" || name == "quad") return TransformMethod::Quadrature;
  if (name == "closed" || name == "bessel") return TransformMethod::BesselClosedForm;
  throw PreconditionError("unknown transform method '" + name + "' (quadrature|closed)");
}

bool has_closed_form(const KernelFamily& family) { return family.tag != FamilyTag::Exact; }

TransformMethod default_method(const KernelFamily& family) {
  return has_closed_form(family) ? TransformMethod::BesselClosedForm : TransformMethod::Quadrature;
}

std::vector<BesselTerm> closed_form_terms(const KernelFamily& family, const ResolvedParams& params) {
  check_params(family, params);
  const double four_pi2 = 4.0 * pi * pi;
  const int m = family.m;
  TermCollector terms;
  switch (family.tag) {
    case FamilyTag::Exact:
      throw PreconditionError("the exact kernel has no closed-form Bessel transform; use quadrature");
    case FamilyTag::Polya:
      terms.add(four_pi2, 2.25, kTwoPi);
      break;
    case FamilyTag::Polya2:
      terms.add(four_pi2, 2.25, kTwoPi);
      terms.add(-6.0 * pi, 1.25, kTwoPi);
      break;
    case FamilyTag::DeBruijn:
      terms.add(four_pi2, 0.25, kTwoPi);
      terms.add(4.0 * pi * pi * pi - 6.0 * pi, 1.25, kTwoPi);
      terms.add(four_pi2, 2.25, kTwoPi);
      break;
    case FamilyTag::Hejhal:
      for (int n = 1; n <= m; ++n) {
        const double n2 = static_cast<double>(n) * n;
        terms.add(four_pi2 * n2 * n2, 2.25, kTwoPi * n2);
        terms.add(-6.0 * pi * n2, 1.25, kTwoPi * n2);
      }
      break;
    case FamilyTag::S1:
    case FamilyTag::S2: {
      const double scale = family.tag == FamilyTag::S1 ? *params.b : *params.c;
      terms.add(four_pi2, 2.25, kTwoPi);
      for (int k = 0; k < m; ++k) {
        const double weight = family.tag == FamilyTag::S1 ? (k + 1.0) / (m + 1.0)
                                                          : 1.0 - std::pow(family.a, k + 1);
        terms.add(four_pi2 * scale * weight, 2.25 * k / m, kTwoPi);
      }
      break;
    }
    case FamilyTag::S3: {
      const CoeffTable h = h_coeffs(m, *params.a);
      for (int j = 0; j <= m; ++j) {
        terms.add(four_pi2 * h.at(j), 2.0 * j / m + 0.25, kTwoPi);
        terms.add(four_pi2 * h.at(j), 2.0 * j / m - 0.25, kTwoPi);
      }
      break;
    }
    case FamilyTag::S4: {
      const auto [a, b] = *params.a_b;
      const CoeffTable d = j_coeffs(m, a, b);
      for (int j = 0; j <= m; ++j) {
        for (int l = 0; l <= m; ++l) {
          const double coeff = four_pi2 * d.at(j, l);
          for (const int sj : {1, -1}) {
            for (const int sl : {1, -1}) terms.add(coeff, 0.25 + static_cast<double>(sj * j + sl * l) / m, kTwoPi);
          }
        }
      }
      break;
    }
  }
  return terms.take();
}

double eval_terms(const std::vector<BesselTerm>& terms, double t) {
  double s = 0.0;
  for (const auto& term : terms) s += term.coeff * std::cosh(term.c * t) * std::exp(-term.a * std::cosh(t));
  return s;
}

double ft_at(const KernelFamily& family, const ResolvedParams& params, double w, TransformMethod method,
             const QuadratureConfig& cfg) {
  check_params(family, params);
  if (!std::isfinite(w) || std::abs(w) > 100.0) {
    throw PreconditionError("ft_at: |w| <= 100 supported, got " + std::to_string(w));
  }
  if (method == TransformMethod::Quadrature) {
    auto kernel = [&](auto t) { return eval_kernel(family, params, t); };
    return fourier_cosine(kernel, w, kTwoPi, cfg);
  }
  const std::vector<BesselTerm> terms = closed_form_terms(family, params);
  double total = 0.0;
  // one batch per distinct argument a
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    std::vector<double> orders;
    while (j < terms.size() && terms[j].a == terms[i].a) orders.push_back(terms[j++].c);
    const std::vector<double> pairs = g_pair_batch(orders, w, terms[i].a, cfg);
    for (std::size_t k = 0; k < pairs.size(); ++k) total += terms[i + k].coeff * pairs[k];
    i = j;
  }
  return total;
}

double xi_at(const KernelFamily& family, const ResolvedParams& params, double z, TransformMethod method,
             const QuadratureConfig& cfg) {
  return ft_at(family, params, 0.5 * z, method, cfg);
}

double normalization(double z) {
  if (!(z >= 0.0)) throw DomainError("normalization: need z >= 0");
  return std::exp(-pi * z / 4.0) * (z + 1.0) * (z + 1.0);
}

Curve xi_curve(const KernelFamily& family, const ResolvedParams& params, std::span<const double> zs,
               TransformMethod method, bool normalize) {
  Curve curve;
  curve.abscissa.assign(zs.begin(), zs.end());
  for (std::size_t i = 1; i < zs.size(); ++i) {
    if (!(zs[i - 1] < zs[i])) throw PreconditionError("xi_curve: abscissa must increase strictly");
  }
  curve.values.resize(zs.size());
  curve.normalized = normalize;
  parallel_for(zs.size(), [&](std::size_t i) {
    const double v = xi_at(family, params, zs[i], method);
    curve.values[i] = normalize ? v / normalization(std::abs(zs[i])) : v;
  });
  return curve;
}

double phi_integral() {
  return integrate_semi_infinite([](double t) { return phi_exact(t); }, QuadratureConfig{});
}

double rel_l1_diff(const KernelFamily& family, const ResolvedParams& params) {
  check_params(family, params);
  if (family.tag == FamilyTag::Exact) throw PreconditionError("rel_l1_diff: family must differ from the exact kernel");
  const QuadratureConfig cfg;
  auto diff = [&](double t) { return phi_exact(t) - eval_kernel(family, params, t); };
  // pieces between sign changes of Phi - K, which stay smooth
  std::vector<double> cuts{0.0};
  for (const Bracket& b : scan_sign_changes(diff, 0.0, cfg.truncation_upper, 0.01)) {
    const double root = b.degenerate() ? b.lo : find_root(diff, b, 1e-14);
    if (root > cuts.back()) cuts.push_back(root);
  }
  if (cuts.back() < cfg.truncation_upper) cuts.push_back(cfg.truncation_upper);
  double l1 = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] < 1e-13) continue;
    l1 += std::abs(integrate_interval(diff, cuts[i], cuts[i + 1], cfg));
  }
  return 100.0 * l1 / phi_integral();
}

}  // namespace xik
