#pragma once

#include <iosfwd>

namespace vt3 {

/// Entry point behind the vt3 binary. Exit status: 0 success (and all checks
/// passed for verifying commands), 1 failed check, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vt3
