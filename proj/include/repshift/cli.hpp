#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repshift {

/// Runs one CLI invocation (argv without the program name). JSON reports go
/// to `out`, diagnostics to `err`. Returns the process exit code:
/// 0 success, 1 runtime/resource error, 2 parse/usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace repshift
