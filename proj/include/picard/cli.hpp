#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace picard::cli {

// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// Runs one CLI invocation. `args` excludes the program name. Results go to
// `out` unless --output names a file; diagnostics go to `err` as a single
// line "error: <Kind>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace picard::cli
