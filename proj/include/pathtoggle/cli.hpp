#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathtoggle {

// Runs the command line `args` (without the program name). Returns the process
// exit code: 0 when every requested check passed, 1 when a check failed or a
// computation reported a negative verdict, 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathtoggle
