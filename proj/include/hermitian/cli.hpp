#ifndef HERMITIAN_CLI_HPP
#define HERMITIAN_CLI_HPP

#include <iosfwd>

namespace hermitian {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2 };

/// Entry point of `hermcode`. Results go to `out`, diagnostics and timing to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hermitian

#endif
