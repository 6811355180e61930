#ifndef QMZV_TOOLS_CLI_HPP
#define QMZV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qmzv::cli
{

// Process exit codes.
enum ExitCode : int
{
    kOk = 0,
    kUsage = 1,
    kInadmissible = 2,
    kClosureFailure = 3,
    kRefuted = 4,
    kNoSolution = 5,
};

// Runs one command line (args excludes the program name). All normal output
// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qmzv::cli

#endif
