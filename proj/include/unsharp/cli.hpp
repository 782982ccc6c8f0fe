#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unsharp::cli {

enum exit_status : int { all_pass = 0, check_failed = 1, input_error = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unsharp::cli
