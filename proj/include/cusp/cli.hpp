#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cusp {

// Full command-line driver; args exclude the program name. Returns the
// process exit code: 0 success, 2 verification failure, 3 input invariant
// failure, 4 parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cusp
