#pragma once

#include <ostream>

namespace hdcov {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitData = 2,
};

/// Entry point of the `hdcov` tool. Subcommands: one-sample, two-sample,
/// constants, simulate, reproduce-table, mp-pdf, fisher-pdf.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hdcov
