#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatcert::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCertificationFailed = 2;

/// Runs the command line `args` (program name excluded). Reports go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatcert::cli
