#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hcb::cli {

inline constexpr const char* kSchema = "hc/1";

enum ExitCode : int { kOk = 0, kInputError = 2, kDomainError = 3 };

/// Runs one invocation; args excludes the program name. JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcb::cli
