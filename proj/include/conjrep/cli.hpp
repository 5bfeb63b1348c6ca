// Command-line front end. run_cli is main() minus the process boundary so
// tests can drive it in-process.
//
// Exit codes: 0 success, 1 verification found a failing invariant, 2 input
// error, 3 mathematical guard failure, 4 resource cap exceeded.

#ifndef CONJREP_CLI_HPP_
#define CONJREP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace conjrep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitGuardError = 3;
inline constexpr int kExitCapError = 4;

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace conjrep

#endif  // CONJREP_CLI_HPP_
