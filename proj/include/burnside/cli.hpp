#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace burnside {

/// Runs one CLI command (args exclude the program name). Output is
/// deterministic: byte-identical across repeated runs.
/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace burnside
