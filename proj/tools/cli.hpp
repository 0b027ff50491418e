#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rectcut::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (args excludes the program name). Machine output
/// and results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rectcut::cli
