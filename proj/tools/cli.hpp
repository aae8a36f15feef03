#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinv::cli {

// Dispatches one invocation (argv without the program name). Returns 0 on
// success, 1 on a domain error (bad file, failed precondition), 2 on a usage
// error. All table output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coinv::cli
