#ifndef SYMCOH_TOOLS_CLI_HPP
#define SYMCOH_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace symcoh::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kGuard = 3 };

/// Runs one command line (args excludes the program name).  Guard settings
/// made by flags or SYMCOH_GUARD_ENTRIES are restored before returning.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcoh::cli

#endif  // SYMCOH_TOOLS_CLI_HPP
