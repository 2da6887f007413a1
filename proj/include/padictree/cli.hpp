#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padictree::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kBadPrime = 3,
    kEngineMismatch = 4,
    kDisagreement = 5,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padictree::cli
