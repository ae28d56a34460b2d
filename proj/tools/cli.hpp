#pragma once

#include <iosfwd>

namespace afflip::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2 };

/// Runs one command line.  Exit 0 on success or a positive verdict, 1 on a
/// negative verdict, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace afflip::cli
