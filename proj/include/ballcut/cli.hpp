#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ballcut::cli {

/// Environment variable holding the default precision, e.g. "8" or "12/1".
inline constexpr const char* kPrecisionEnv = "BALLCUT_PRECISION";

/// Runs one command line (without the program name). Returns the exit status:
/// 0 on success, 2 when a result is indeterminate at the working precision,
/// 1 on any other error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ballcut::cli
