#ifndef CORFUN_CLI_HPP
#define CORFUN_CLI_HPP

#include <string>
#include <vector>

namespace corfun::cli {

// Runs the command line given the arguments after the program name.
// Returns the process exit code: 0 success, 1 usage, 2 validation,
// 3 budget, 4 invariant failure.  Errors print a single line to stderr
// of the form "corfun: <kind> error: <message>".
int run(const std::vector<std::string>& args);

}  // namespace corfun::cli

#endif
