#pragma once

#include <ostream>

namespace berkline {

// Batch front end.  Exit codes: 0 success, 2 input error, 3 precision
// exhausted, 4 internal invariant violation.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace berkline
