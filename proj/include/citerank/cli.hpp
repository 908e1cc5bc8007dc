#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace citerank::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Runs the command line `args` (without the program name). Returns the
/// process exit status: 0 on success, 1 on any error, 2 on bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace citerank::cli
