#pragma once

// The ten-point acceptance suite shared by the `acceptance` test binary and
// the `cbgraph corpus` subcommand. Prints one pass/fail line per criterion.

#include <iosfwd>

namespace cbg {

// Returns the number of failing criteria (0 = full pass).
int run_acceptance_suite(std::ostream& out);

}  // namespace cbg
