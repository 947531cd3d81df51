#pragma once

#include <ostream>

namespace tleaf::cli {

enum ExitCode { kPass = 0, kFailure = 1, kUsage = 2 };

/// Entry point of the `tleaf` tool. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tleaf::cli
