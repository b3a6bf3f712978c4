#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adlv::cli {

enum ExitCode { kVerified = 0, kCounterexample = 1, kInvalidInput = 2 };

// Parses args (without the program name), dispatches and writes the report to
// out, or to --out when given. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adlv::cli
