#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nofactor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitBudget = 2;

/// Runs one subcommand. args excludes the program name. Artifacts without an
/// --out path go to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nofactor::cli
