#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itbatch {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Subcommands: simulate, fit, optimize, run-workload, speedup. Results go to
// `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itbatch
