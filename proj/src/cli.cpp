#include "xik/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "xik/errors.hpp"
#include "xik/numerics.hpp"
#include "xik/verify.hpp"
#include "xik/xi.hpp"

namespace xik::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string family = "exact";
  int m = 0;
  double a = 0.0;
  std::string params_file;
  std::string format;
  std::string out;
  std::string grid;
  std::string range = "0:100";
  double step = kDefaultZeroStep;
  double tol = kDefaultZeroTol;
  std::string method;
  std::string suite = "all";
};

std::vector<double> split_numbers(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError(std::string(what) + ": cannot parse '" + item + "' as a number");
    }
  }
  if (parts.size() != count) {
    throw PreconditionError(std::string(what) + " must have the form " + (count == 3 ? "lo:hi:step" : "lo:hi"));
  }
  return parts;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto g = split_numbers(text, 3, "--grid");
  if (!(g[0] < g[1]) || !(g[2] > 0.0)) throw PreconditionError("--grid needs lo < hi and step > 0");
  return scan_grid(g[0], g[1], g[2]);
}

KernelFamily family_from_json(const json& j) {
  const json& f = j.contains("family") ? j.at("family") : j;
  KernelFamily family;
  family.tag = parse_tag(f.at("tag").get<std::string>());
  family.m = f.value("m", 0);
  family.a = f.value("a", 0.0);
  return family;
}

KernelFamily selected_family(const Options& o) {
  if (!o.params_file.empty()) {
    std::ifstream in(o.params_file);
    if (!in) throw PreconditionError("cannot read --params file '" + o.params_file + "'");
    try {
      return family_from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw PreconditionError("malformed --params file: " + std::string(e.what()));
    }
  }
  KernelFamily family;
  family.tag = parse_tag(o.family);
  family.m = o.m;
  family.a = o.a;
  return family;
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    file << content;
    file.close();
    if (!file) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  fs::rename(tmp, target);
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "json") throw PreconditionError("--format must be csv or json");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string cmd_params(const Options& o) {
  const ResolvedParams p = resolve_params(selected_family(o));
  const json j = params_json(p);
  if (o.format == "json") return dump(j);
  std::ostringstream os;
  os << "name,value\n";
  for (const auto& [key, value] : j.items()) {
    if (value.is_number()) {
      os << key << ',' << format_number(value.get<double>()) << '\n';
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) os << key << '_' << i << ',' << format_number(value[i].get<double>()) << '\n';
    }
  }
  return os.str();
}

std::string cmd_kernel(const Options& o) {
  const KernelFamily family = selected_family(o);
  const ResolvedParams p = resolve_params(family);
  const std::vector<double> ts = parse_grid(o.grid.empty() ? "0:3:0.01" : o.grid);
  std::vector<double> values;
  values.reserve(ts.size());
  for (const double t : ts) values.push_back(eval_kernel(family, p, t));
  if (o.format == "json") return dump({{"family", family_json(family)}, {"t", ts}, {"value", values}});
  std::ostringstream os;
  os << "t,value\n";
  for (std::size_t i = 0; i < ts.size(); ++i) os << format_number(ts[i]) << ',' << format_number(values[i]) << '\n';
  return os.str();
}

std::string cmd_xi(const Options& o) {
  const KernelFamily family = selected_family(o);
  const ResolvedParams p = resolve_params(family);
  const TransformMethod method = o.method.empty() ? default_method(family) : parse_method(o.method);
  const std::vector<double> zs = parse_grid(o.grid.empty() ? "0:100:0.05" : o.grid);
  const Curve curve = xi_curve(family, p, zs, method, false);
  std::vector<double> normalized(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) normalized[i] = curve.values[i] / normalization(std::abs(zs[i]));
  if (o.format == "json") {
    return dump({{"family", family_json(family)},
                 {"method", method_name(method)},
                 {"z", zs},
                 {"value", curve.values},
                 {"normalized_value", normalized}});
  }
  std::ostringstream os;
  os << "z,value,normalized_value\n";
  for (std::size_t i = 0; i < zs.size(); ++i) {
    os << format_number(zs[i]) << ',' << format_number(curve.values[i]) << ',' << format_number(normalized[i]) << '\n';
  }
  return os.str();
}

std::string cmd_zeros(const Options& o) {
  const KernelFamily family = selected_family(o);
  const ResolvedParams p = resolve_params(family);
  const auto range = split_numbers(o.range, 2, "--range");
  std::optional<TransformMethod> method;
  if (!o.method.empty()) method = parse_method(o.method);
  const ZeroReport report = locate_zeros(family, p, range[0], range[1], o.step, o.tol, method);
  if (o.format == "json") return dump(zero_report_json(report, p));
  std::ostringstream os;
  os << "index,zero,residual\n";
  for (std::size_t i = 0; i < report.zeros.size(); ++i) {
    os << i + 1 << ',' << format_number(report.zeros[i]) << ',' << format_number(report.residuals[i]) << '\n';
  }
  return os.str();
}

std::string cmd_diff(const Options& o) {
  const KernelFamily family = selected_family(o);
  const ResolvedParams p = resolve_params(family);
  const double pct = rel_l1_diff(family, p);
  if (o.format == "json") {
    return dump({{"family", family_json(family)}, {"params", params_json(p)}, {"rel_l1_percent", pct}});
  }
  return "family,rel_l1_percent\n" + family.name() + ',' + format_number(pct) + '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::vector<CheckResult> results = run_suite(o.suite);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
    if (!r.pass) ++failed;
  }
  out << results.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitNumerical;
}

void add_family_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "exact, polya, polya2, debruijn, hejhal, s1, s2, s3, s4");
  cmd->add_option("--m", o.m, "family order m");
  cmd->add_option("--a", o.a, "S2 parameter a");
  cmd->add_option("--params", o.params_file, "read the family from a params JSON file");
}

void add_output_options(CLI::App* cmd, Options& o, const std::string& default_format) {
  cmd->add_option("--format", o.format, "csv or json (default " + default_format + ")")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

json family_json(const KernelFamily& family) {
  json j{{"tag", tag_name(family.tag)}};
  switch (family.tag) {
    case FamilyTag::S2:
      j["a"] = family.a;
      [[fallthrough]];
    case FamilyTag::Hejhal:
    case FamilyTag::S1:
    case FamilyTag::S3:
    case FamilyTag::S4:
      j["m"] = family.m;
      break;
    default:
      break;
  }
  return j;
}

json params_json(const ResolvedParams& p) {
  json j{{"family", family_json(p.family)},
         {"beta", p.beta},
         {"gamma", p.gamma},
         {"delta", p.delta},
         {"phi0", p.phi0},
         {"phi2_paper", p.phi2_paper}};
  if (p.b) j["b"] = *p.b;
  if (p.c) j["c"] = *p.c;
  if (p.mu) j["mu"] = *p.mu;
  if (p.a) j["a"] = *p.a;
  if (p.a_b) j["a_b"] = {p.a_b->first, p.a_b->second};
  return j;
}

json zero_report_json(const ZeroReport& report, const ResolvedParams& params) {
  json j{{"family", report.family ? family_json(*report.family) : json(nullptr)},
         {"params", params_json(params)},
         {"range", {report.range.first, report.range.second}},
         {"step", report.step},
         {"tol", report.tol},
         {"count", report.count},
         {"zeros", report.zeros},
         {"residuals", report.residuals}};
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann Xi kernels: parameters, kernel curves, transforms, zeros and checks", "xik"};
  app.require_subcommand(1);
  Options o;

  auto* params = app.add_subcommand("params", "solved family parameters and shared constants");
  add_family_options(params, o);
  add_output_options(params, o, "json");

  auto* kernel = app.add_subcommand("kernel", "kernel values on a t grid");
  add_family_options(kernel, o);
  add_output_options(kernel, o, "csv");
  kernel->add_option("--grid", o.grid, "lo:hi:step (default 0:3:0.01)");

  auto* xi = app.add_subcommand("xi", "transform Xi(z) on a z grid with the N(z) normalization");
  add_family_options(xi, o);
  add_output_options(xi, o, "csv");
  xi->add_option("--grid", o.grid, "lo:hi:step (default 0:100:0.05)");
  xi->add_option("--method", o.method, "quadrature or closed (default: closed where available)");

  auto* zeros = app.add_subcommand("zeros", "real zeros of Xi on (lo, hi]");
  add_family_options(zeros, o);
  add_output_options(zeros, o, "json");
  zeros->add_option("--range", o.range, "lo:hi (default 0:100)");
  zeros->add_option("--step", o.step, "scan step (default 0.05)");
  zeros->add_option("--tol", o.tol, "bracket refinement tolerance (default 1e-10)");
  zeros->add_option("--method", o.method, "quadrature or closed");

  auto* diff = app.add_subcommand("diff", "relative L1 difference to the exact kernel, in percent");
  add_family_options(diff, o);
  add_output_options(diff, o, "json");

  auto* verify = app.add_subcommand("verify", "run the built-in invariant checks");
  verify->add_option("--suite", o.suite, "all, theta, besselk, coeffs, kernels, xi, zeros, lp");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    // the options struct is shared, so the per-command default is applied here
    if (o.format.empty()) o.format = kernel->parsed() || xi->parsed() ? "csv" : "json";
    check_format(o.format);
    std::string content;
    if (params->parsed()) content = cmd_params(o);
    if (kernel->parsed()) content = cmd_kernel(o);
    if (xi->parsed()) content = cmd_xi(o);
    if (zeros->parsed()) content = cmd_zeros(o);
    if (diff->parsed()) content = cmd_diff(o);
    emit(content, o.out, out);
    return kExitOk;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace xik::cli
