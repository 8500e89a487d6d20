#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ietrel::cli {

/// Exit codes: 0 success, 1 failed mathematical check, 2 malformed input.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ietrel::cli
