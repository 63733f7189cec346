#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "xik/besselk.hpp"
#include "xik/errors.hpp"
#include "xik/kernels.hpp"
#include "xik/lp.hpp"
#include "xik/theta.hpp"
#include "xik/xi.hpp"
#include "xik/zeros.hpp"

namespace py = pybind11;
using namespace xik;

namespace {

KernelFamily make_family(const std::string& tag, int m, double a) {
  KernelFamily f;
  f.tag = parse_tag(tag);
  f.m = m;
  f.a = a;
  return f;
}

TransformMethod method_or_default(const KernelFamily& f, const std::string& method) {
  return method.empty() ? default_method(f) : parse_method(method);
}

py::dict params_dict(const ResolvedParams& p) {
  py::dict d;
  d["family"] = p.family.name();
  d["beta"] = p.beta;
  d["gamma"] = p.gamma;
  d["delta"] = p.delta;
  d["phi0"] = p.phi0;
  d["phi2_paper"] = p.phi2_paper;
  if (p.b) d["b"] = *p.b;
  if (p.c) d["c"] = *p.c;
  if (p.mu) d["mu"] = *p.mu;
  if (p.a) d["a"] = *p.a;
  if (p.a_b) d["a_b"] = py::make_tuple(p.a_b->first, p.a_b->second);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Riemann Xi kernels and their approximations";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("theta", &theta, py::arg("x"));
  m.def("phi", [](double t) { return phi_exact(t); }, py::arg("t"));
  m.def("bessel_k", [](double c, double nu, double a) { return bessel_k({c, nu}, a); },
        py::arg("c"), py::arg("nu"), py::arg("a"));

  m.def("params", [](const std::string& family, int order, double a) {
    return params_dict(resolve_params(make_family(family, order, a)));
  }, py::arg("family"), py::arg("m") = 0, py::arg("a") = 0.0);

  m.def("kernel", [](const std::string& family, const std::vector<double>& ts, int order, double a) {
    const KernelFamily f = make_family(family, order, a);
    const ResolvedParams p = resolve_params(f);
    std::vector<double> out;
    out.reserve(ts.size());
    for (double t : ts) out.push_back(eval_kernel(f, p, t));
    return out;
  }, py::arg("family"), py::arg("t"), py::arg("m") = 0, py::arg("a") = 0.0);

  m.def("xi", [](const std::string& family, const std::vector<double>& zs, int order, double a,
                 const std::string& method, bool normalize) {
    const KernelFamily f = make_family(family, order, a);
    const ResolvedParams p = resolve_params(f);
    py::gil_scoped_release release;
    return xi_curve(f, p, zs, method_or_default(f, method), normalize).values;
  }, py::arg("family"), py::arg("z"), py::arg("m") = 0, py::arg("a") = 0.0, py::arg("method") = "",
     py::arg("normalize") = false);

  m.def("zeros", [](const std::string& family, double lo, double hi, double step, int order, double a) {
    const KernelFamily f = make_family(family, order, a);
    const ResolvedParams p = resolve_params(f);
    py::gil_scoped_release release;
    return locate_zeros(f, p, lo, hi, step).zeros;
  }, py::arg("family"), py::arg("lo") = 0.0, py::arg("hi") = 100.0, py::arg("step") = kDefaultZeroStep,
     py::arg("m") = 0, py::arg("a") = 0.0);

  m.def("rel_l1_diff", [](const std::string& family, int order, double a) {
    const KernelFamily f = make_family(family, order, a);
    return rel_l1_diff(f, resolve_params(f));
  }, py::arg("family"), py::arg("m") = 0, py::arg("a") = 0.0);

  m.def("roots_in_unit_disk", [](const std::vector<double>& coeffs) { return roots_in_unit_disk({coeffs}); },
        py::arg("coeffs"));
}
