#pragma once

#include <iosfwd>

namespace clonekit {

// Runs the command-line front end; writes one JSON document to `out`.
// Returns 0 on success, 1 on input validation errors (usage goes to `err`),
// 2 on numerical failure (non-convergence, residual above tolerance).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace clonekit
