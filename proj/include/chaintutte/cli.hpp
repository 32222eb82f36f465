#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chaintutte::cli {

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`; diagnostics go to `err`, as JSON for computation errors.
/// Returns 0 on success, 1 on a computation error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaintutte::cli
