#ifndef POTENTIA_CLI_COMMANDS_HPP
#define POTENTIA_CLI_COMMANDS_HPP

#include <ostream>
#include <span>
#include <string>

namespace potentia::cli {

/// Dispatches one invocation of the command-line tool. `args` excludes the
/// program name. Everything is written to the given streams, so callers
/// (tests included) can run the tool in-process.
///
/// Exit codes: 0 success, 1 negative verdict (failed --expect, rejected
/// proof, law failure), 2 malformed input or usage, 3 resource cap
/// exceeded.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace potentia::cli

#endif
