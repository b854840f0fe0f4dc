#pragma once

#include <iosfwd>

namespace knotbrt {

/// Entry point of the command-line tool.  Exit codes: 0 success, 1 parse
/// or usage errors, 2 precondition violations, 3 verification mismatch.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace knotbrt
