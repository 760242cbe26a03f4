#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strembed::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

/// Runs the command line `args` (without the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strembed::cli
