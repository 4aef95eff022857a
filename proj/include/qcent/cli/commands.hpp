#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcent::cli {

// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kNotCorrectable = 2,
    kUnsupported = 3,
    kRegressionFailure = 4,
};

// Environment variable naming a JSON tolerance file used when --tolerances is absent.
inline constexpr const char* kToleranceEnv = "QCENT_TOLERANCES";

/// Runs the command line `args` (without the program name), writing the
/// primary output to `out` (or the --output file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcent::cli
