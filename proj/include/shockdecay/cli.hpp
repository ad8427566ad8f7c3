#pragma once

#include <iosfwd>

namespace shockdecay::cli {

enum ExitCode : int {
    kOk = 0,
    kConfig = 2,     // bad flags, config file or parameter values
    kNumerical = 3,  // solver or fitting failure
    kPartial = 4,    // compare-methods finished with a failed sub-pipeline
};

// Entry point shared by the executable and the tests. Data goes to `out` unless
// --out names a file; diagnostics and summaries go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shockdecay::cli
