#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burst::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kMalformedInput = 2,
};

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace burst::cli
