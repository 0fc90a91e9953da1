#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nested {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Runs the nestedfx command line; args excludes the program name.
/// Returns the process exit code.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nested
