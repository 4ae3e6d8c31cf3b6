#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fpg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCosetLimit = 2;

/// Runs one command. `args` excludes the program name. Exactly one JSON
/// document is written to `out`, either the result or an error record.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace fpg::cli
