#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invgen::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

// args excludes the program name. The emitted document goes to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invgen::cli
