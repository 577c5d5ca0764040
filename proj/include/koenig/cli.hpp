#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace koenig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // sweep disagreement or certificate that does not verify
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Reads KOENIG_BUDGET from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace koenig::cli
