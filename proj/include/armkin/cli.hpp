#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace armkin::cli {

enum ExitCode : int {
    kOk = 0,
    kRuntime = 1,
    kUsage = 2,
    kDomain = 3,
    kConfig = 4,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed six-decimal formatting used for every number the tool prints.
std::string fixed6(double v);

} // namespace armkin::cli
