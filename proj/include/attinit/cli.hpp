#pragma once

#include <string>
#include <vector>

namespace attinit {

/// Exit codes of the attinit tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 1,
    kExitIoError = 2,
    kExitNumericalFailure = 3,  ///< >= 1 run failed; partial results written
};

/// Entry point behind main(), callable from tests. `args` excludes argv[0].
int cli_main(const std::vector<std::string>& args);

}  // namespace attinit
