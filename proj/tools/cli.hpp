#ifndef MAGNUS_TOOLS_CLI_HPP
#define MAGNUS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace magnus::cli
{

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kNonConvergence = 3,
};

// args excludes the program name. Output goes to `out` unless --output is
// given; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace magnus::cli

#endif
