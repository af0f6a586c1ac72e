#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primeray::cli {

/// Executes one CLI invocation. `args` is argv without the program name.
/// Exit codes: 0 success / no violation, 1 verified violation or runtime
/// failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace primeray::cli
