#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace siegel::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kNotMember = 3,
  kInternal = 4,
  kVerifyFailed = 5,
  kUnsupported = 6,
};

/// Runs the command line `args` (without the program name). `in` is used
/// when neither --in nor --point is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace siegel::cli
