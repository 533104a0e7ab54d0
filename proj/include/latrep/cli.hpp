#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latrep {

// Runs one CLI command (arguments without the program name) and returns the
// process exit code:
//   0  success / affirmative decision
//   1  input is not a lattice
//   2  parse, validation or precondition error
//   3  negative decision (e.g. does not embed)
//   4  a cap was exceeded
//   5  a certificate fired (two verified routes disagreed)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latrep
