#pragma once

#include <iosfwd>

namespace bsi {

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Parses argv, runs one subcommand and returns its exit code. Reports go to
/// `out` (and to --out files); diagnostics and usage go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bsi
