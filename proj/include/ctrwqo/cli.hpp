#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctrwqo {

enum ExitCode : int { kExitTrue = 0, kExitFalse = 1, kExitInputError = 2, kExitExhausted = 3 };

/// Runs one `ctrwqo` invocation (args exclude the program name). The JSON
/// report goes to `out` (and to --json PATH), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctrwqo
