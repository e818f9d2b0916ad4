#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace residua::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { ok = 0, violation = 1, bad_input = 2, bad_dimension = 3, io_failure = 4 };

/// Runs one command line (program name excluded) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace residua::cli
