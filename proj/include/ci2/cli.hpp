#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ci2 {

// Runs one CLI invocation (arguments without the program name) against the
// given output and error streams. Returns the process exit code:
//   0 pass (or partial: incomplete evidence is not a failure)
//   1 any fail verdict or a violated identity
//   2 input error
//   3 budget exceeded
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ci2
