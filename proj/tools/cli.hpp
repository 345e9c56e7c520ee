#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitInternalError = 2;

/// Runs one command line (without the program name). Output goes to out,
/// diagnostics and usage to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittkit::cli
