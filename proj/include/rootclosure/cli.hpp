#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootclosure {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitBudget = 2, kExitInput = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rootclosure
