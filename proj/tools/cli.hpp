#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace expcong::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kResourceCap = 3,
};

// Runs one invocation. args excludes the program name. env_max_n carries
// EXPCONG_MAX_N when set; --max-n takes precedence over it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_max_n = std::nullopt);

}  // namespace expcong::cli
