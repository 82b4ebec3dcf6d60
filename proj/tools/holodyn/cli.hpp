#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace holodyn::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kSelfCheck = 2,
    kInapplicable = 3,
    kPrecondition = 4,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1.5", "2-3i", "i", "-0.5i".
std::complex<double> parse_complex(const std::string& text);

}  // namespace holodyn::cli
