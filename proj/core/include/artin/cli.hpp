#ifndef ARTIN_CLI_HPP
#define ARTIN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace artin {

// Runs one CLI invocation (args exclude the program name). Exit codes:
// 0 computed, 1 input error, 2 internal invariant failure. Boolean
// answers live in the payload, never in the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace artin

#endif // ARTIN_CLI_HPP
