#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lambdacol::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kUsageError = 2,
};

/// Runs one command. args excludes the program name. Results go to out, the
/// one-line diagnostic for a failure goes to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lambdacol::cli
