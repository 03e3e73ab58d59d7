#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rebit {

/// Entry point of the `rebit` command line tool. `args` excludes the program
/// name. Returns the process exit code: 0 on success, 1 when a verification
/// report has a failing row, 2 on usage or input errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace rebit
