#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nodalk {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitSchema = 2,
  kExitContradiction = 3,
};

/// Parses "a..b" or "a" into an inclusive range; throws std::invalid_argument.
std::pair<long long, long long> parse_range(const std::string& text);

/// Entry point shared by the executable and the tests.  args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nodalk
