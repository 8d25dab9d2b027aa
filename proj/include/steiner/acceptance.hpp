#pragma once

// The acceptance suite: one line per criterion, true iff every criterion
// passed. Shared by the `selftest` CLI subcommand and the acceptance test
// binary.

#include <ostream>

namespace steiner {

bool run_acceptance(std::ostream& out);

}  // namespace steiner
