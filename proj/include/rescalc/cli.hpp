#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rescalc::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
};

// Runs one rescalc invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rescalc::cli
