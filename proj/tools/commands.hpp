#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvfcm::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 2,
    exit_io = 3,
    exit_numerical = 4,
};

/// Entry point of the `mvfcm` tool: `generate`, `fit` and `evaluate`
/// subcommands. Structured output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvfcm::cli
