#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wrt {

// Runs the command-line front end. Returns the process exit code:
// 0 success, 1 domain error, 2 verification failure, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wrt
