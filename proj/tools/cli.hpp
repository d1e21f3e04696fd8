#pragma once

#include <iosfwd>

namespace nildist::cli {

/// Exit codes.
enum : int {
  kOk = 0,
  kUsage = 1,
  kCapExceeded = 2,
  kInternal = 3,
};

/// Runs one `nildist` invocation, writing results to `out` and diagnostics
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nildist::cli
