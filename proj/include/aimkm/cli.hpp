#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aimkm::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDataError = 2,
    kIoError = 3,
};

/// Runs the tool with `args` (not including the program name). Normal output
/// goes to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aimkm::cli
