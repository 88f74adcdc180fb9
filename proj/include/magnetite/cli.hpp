#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace magnetite::cli {

/// Dispatches one CLI invocation (args exclude the program name) and writes
/// the report to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success, 1 mathematical validation failure (including a
/// verify mismatch), 2 resource limit, 3 parse/usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace magnetite::cli
