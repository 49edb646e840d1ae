#pragma once

#include <iosfwd>

namespace spnum::cli {

// Dispatches the spnum subcommands. Machine output goes to `data`,
// everything human-facing (usage, warnings, timings) to `diagnostics`.
// Exit codes: 0 success, 1 a verification or enumeration produced a
// failing record, 2 usage or domain error.
int run(int argc, const char* const* argv, std::ostream& data, std::ostream& diagnostics);

}  // namespace spnum::cli
