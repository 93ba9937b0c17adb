#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csumm {

// Dispatches one invocation: args exclude the program name. Returns 0 on
// success, 2 for bad flags or config values, 1 for anything else (missing
// files, format problems, diverged training). `in` backs predict's standard
// input; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace csumm
