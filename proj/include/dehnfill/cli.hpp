#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dehn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (arguments after the program name). The JSON report
/// goes to `out`; usage errors produce a one-line diagnostic on `err`.
/// Returns 0 on success, 1 on a failed check or uncertifiable input, 2 on a
/// usage or parse error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dehn::cli
