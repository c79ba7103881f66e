#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aqrm {

/// Entry point of the `aqrm` command line (arguments without the program
/// name). Results go to `out` or to files named by --output; errors are
/// written to `err` as one-line JSON records.
///
/// Exit codes: 0 success, 2 invalid input, 3 solver failure,
/// 4 precondition violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aqrm
