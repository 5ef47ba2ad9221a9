#pragma once

#include <iosfwd>

namespace gpack::cli {

// Exit codes returned by run_cli.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kNumericError = 3,
  kResourceError = 4,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpack::cli
