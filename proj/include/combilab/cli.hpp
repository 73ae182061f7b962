#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace combilab {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitVerifyFailure = 1,
    kExitUsage = 2,
    kExitSizeGuard = 3,
};

/// Entry point of the combilab executable. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combilab
