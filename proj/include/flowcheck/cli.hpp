#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowcheck {

// Parses the argument vector (program name excluded), runs the selected
// command, and writes CSV to out unless --out redirects it to a file.
// Diagnostics and the version banner go to err; --quiet suppresses the
// banner. Returns 0 on success, 2 on any invalid command, option, or
// exponent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowcheck
