#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qci::cli {

enum ExitCode { exit_ok = 0, exit_refuted = 1, exit_input_error = 2, exit_internal = 3 };

// Runs one command line (args[0] is the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qci::cli
