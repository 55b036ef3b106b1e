#pragma once

#include <ostream>
#include <span>
#include <string>

namespace ccsp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // mismatch, unhealthy term, state cap hit
inline constexpr int kExitUsage = 2;    // parse or usage error

/// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ccsp::cli
