#ifndef SCALECOMPLEX_CLI_HPP
#define SCALECOMPLEX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace scx::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kCapacityError = 3,
};

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace scx::cli

#endif
