#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace divpoly {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit status: 0 success or true, 1 false or domain error, 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divpoly
