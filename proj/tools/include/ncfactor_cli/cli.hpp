#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncfactor::cli {

/// Exit codes: 0 success, 1 a requested check failed, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncfactor::cli
