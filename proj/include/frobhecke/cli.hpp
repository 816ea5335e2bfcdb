#pragma once

#include <iosfwd>

namespace fh {

// Full command-line surface; returns the process exit code:
// 0 success, 1 verification failure, 2 input error.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace fh
