#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcli {

/// Exit statuses: 0 success, 1 semantic failure, 2 usage or parse error.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one `qspace` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcli
