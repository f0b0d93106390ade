#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asai::cli {

enum ExitCode { kOk = 0, kInternalError = 1, kInputError = 2, kVerificationFailure = 3 };

// Runs the command line (args excludes the program name); output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asai::cli
