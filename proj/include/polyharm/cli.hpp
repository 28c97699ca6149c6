#pragma once

#include <ostream>
#include <span>
#include <string>

namespace polyharm::cli {

/// Exit codes: 0 success / compliant / clean suite; 1 violation found, suite
/// failure or conjecture candidate; 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polyharm::cli
