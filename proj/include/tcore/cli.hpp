#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tcore/partition.hpp"

namespace tcore {

enum ExitCode : int { kExitOk = 0, kExitRuntime = 1, kExitValidation = 2 };

/// Runs one CLI invocation; args excludes the program name. Results go to
/// out, a single-line JSON error object to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "5,4,4,1" -> (5,4,4,1); "" -> empty. Rejects anything not weakly decreasing.
Partition parse_partition_list(const std::string& text);

}  // namespace tcore
