#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinent {

/// Runs one CLI invocation. args excludes the program name.
/// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinent
