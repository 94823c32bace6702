#pragma once

#include <ostream>

namespace polylog {

// Exit codes: 0 ok, 1 parse or usage error, 2 degenerate face or numeric
// failure, 3 failed verification.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polylog
