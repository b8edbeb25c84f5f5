#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace remspec {

// Runs one command line (arguments without the program name), writing the
// report to `out` and diagnostics to `err`. Returns the process exit code:
//   0  success; for `verify`, additionally every proved bound holds
//   1  usage error, malformed polynomial, or fixture mismatch in `corpus`
//   2  violated mathematical precondition (decomposable fraction,
//      dependent pair, derivation that does not annihilate the fraction)
//   3  a proved inequality failed on this input
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace remspec
