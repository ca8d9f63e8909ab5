#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringinv::cli {

/// Exit codes of run().
enum ExitCode : int {
    ok = 0,         // result computed, or every checked tuple holds
    violation = 1,  // a law was violated, or the requested inverse does not exist
    usage = 2,      // bad flags, unparsable ring or literal, rejected precondition
    internal = 3,   // a closed-form candidate failed its own validation
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringinv::cli
