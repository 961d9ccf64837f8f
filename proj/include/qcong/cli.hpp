#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcong {

/// Runs the command line front end on `args` (without the program name) and
/// returns the process exit code. Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3..7", "2,3,5" and mixtures such as "2..4,9". Throws InvalidArgument.
std::vector<long> parse_values(const std::string& text);

}  // namespace qcong
