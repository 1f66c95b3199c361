#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracterm::cli {

/// Exit statuses of the command-line tool.
enum Status : int {
  kOk = 0,
  kParseError = 2,
  kSafetyError = 3,
  kDomainError = 4,
};

/// Runs one invocation; `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracterm::cli
