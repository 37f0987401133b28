#pragma once

#include <ostream>

namespace negalcd {

/// Exit codes: 0 success, 2 bad parameters, 3 verification mismatch, 1 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace negalcd
