#ifndef MOMENTFORGE_CLI_HPP
#define MOMENTFORGE_CLI_HPP

#include <iosfwd>

namespace momentforge {

/* Exit statuses: 0 success, 1 input error, 2 internal-consistency failure
 * (including a failed `verify`), 3 enumeration budget exceeded. */
enum ExitStatus : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitConsistency = 2,
  kExitResource = 3,
};

/// Parses argv (argv[0] is the program name) and runs one command.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace momentforge

#endif // MOMENTFORGE_CLI_HPP
