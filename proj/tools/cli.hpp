#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linknet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kExplosionAborted = 3,
};

/// Runs the command line `args` (without the program name). `-` as an input
/// reads `in`; output goes to `out` unless `--output` names a file, which is
/// only created once the command has fully succeeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace linknet::cli
