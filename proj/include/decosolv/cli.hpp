// cli.hpp — Command-line surface.  The binary in tools/ is a thin wrapper
// around run() so the whole interface stays unit-testable in process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decosolv::cli {

inline constexpr int exit_success = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;

// args excludes the program name.  Returns one of the exit codes above;
// every command is deterministic given its flags (plus seed where one
// applies).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace decosolv::cli
