#pragma once

#include <iosfwd>

namespace wfree {

// Entry point of the `wfree` tool. Exit codes: 0 all checks pass, 1 a check
// or kernel comparison failed, 2 usage, parse or configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wfree
