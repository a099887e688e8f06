#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segcover {

// Runs one CLI invocation (args exclude the program name) and writes results
// to the given streams. Exit status: 0 on success (an infeasible answer is a
// success), 1 on usage errors, 2 on I/O or input parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segcover
