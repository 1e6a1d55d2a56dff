#pragma once

// Command-line driver. Output is deterministic; `--json` switches every
// subcommand to a JSON document on `out`.

#include <ostream>
#include <string>
#include <vector>

namespace qschubert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. Diagnostics go to `err` as one line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qschubert::cli
