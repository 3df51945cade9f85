#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadpair {

/// Dispatches one CLI invocation. Returns the process exit code:
/// 0 ok, 1 usage error, 2 domain error.
int runCli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace quadpair
