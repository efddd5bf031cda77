#pragma once

#include <iosfwd>

namespace torsion {

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitInconsistency = 2,
    kExitSelfcheckFailed = 3,
};

/// Entry point of the torsion-lab command line tool. The JSON report goes to
/// `out`, the human summary and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torsion
