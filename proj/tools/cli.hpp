#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dilator {

/// Runs the command line given argv-style arguments (without the program
/// name). Writes the JSON report to out and diagnostics to err. Exit codes:
/// 0 all checks pass/certify, 1 some check failed or produced a witness,
/// 2 malformed input or usage, 3 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dilator
