#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tcshift::cli {

enum ExitCode : int {
  kSubnormal = 0,
  kNotSubnormal = 1,
  kInvalidInstance = 2,
  kParseError = 3,
  kUsage = 64,
};

/// Runs one command.  `args` excludes the program name, e.g.
/// {"check", "f1.json", "--json"}.  Sweeps report exit 0 once every point has
/// been evaluated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcshift::cli
