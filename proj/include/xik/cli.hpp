#pragma once

// The `xik` command line: params, kernel, xi, zeros, diff and verify.
//
// Exit codes: 0 success, 1 argument or parameter-constraint error, 2 numerical
// failure (including a failed verify check). Output files are written to a
// temporary sibling and renamed into place, so a failed run leaves no file.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "xik/kernels.hpp"
#include "xik/zeros.hpp"

namespace xik::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json family_json(const KernelFamily& family);
nlohmann::json params_json(const ResolvedParams& params);
nlohmann::json zero_report_json(const ZeroReport& report, const ResolvedParams& params);

/// 12 significant digits, as used in every CSV file.
std::string format_number(double v);

}  // namespace xik::cli
