#ifndef HYPERCOL_TOOLS_CLI_H_
#define HYPERCOL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace hypercol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success, 1 when a counterexample or violated invariant was found, and 2 on
// usage or input errors (with a one-line diagnostic on `err`).
int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercol::cli

#endif  // HYPERCOL_TOOLS_CLI_H_
