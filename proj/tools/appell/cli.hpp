#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace appell::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kSingular = 4,
};

/// Entry point shared by the `appell` binary and the tests. argv[0] is the
/// program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience wrapper; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace appell::cli
