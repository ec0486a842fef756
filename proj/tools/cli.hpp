#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace magic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 1 on data errors, 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace magic::cli
