#pragma once

#include <ostream>

namespace rotset {

enum ExitCode : int {
    exit_ok = 0,
    exit_checks_failed = 1,
    exit_invalid_input = 2,
    exit_resource_cap = 3,
};

/// Command-line entry point. JSON goes to `out`, the human-readable report to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rotset
