#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyrad::cli {

inline constexpr int kExitOk = 0;
/// Hypothesis, validation or inequality failure.
inline constexpr int kExitFailure = 1;
/// Bad flags, unreadable input, malformed JSON, unwritable output.
inline constexpr int kExitIo = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyrad::cli
