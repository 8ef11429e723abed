#pragma once

#include <iosfwd>

namespace polydom::cli {

enum ExitCode : int {
    kOk = 0,
    kInadmissible = 1,
    kUsage = 2,
    kInconclusive = 3,
    kContradiction = 4,
};

/// Entry point of the `polydom` tool. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polydom::cli
