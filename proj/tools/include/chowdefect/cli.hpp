#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowdefect::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (argv[0] is the program name). Reports go to
/// `out` or to --output; diagnostics go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace chowdefect::cli
