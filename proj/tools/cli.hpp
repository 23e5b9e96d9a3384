#pragma once

#include <ostream>

namespace supermonad {

/// Exit codes: 0 success, 2 invalid input, 3 refusal, 4 internal invariant
/// breach.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace supermonad
