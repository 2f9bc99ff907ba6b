#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heavy {

/// Entry point of the `heavy` tool: subcommands generate, check, census and
/// verify. Exit codes are 0 for success or a true property, 1 for a false
/// property or a failed verification, 2 for usage, parse or budget errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with args[0] taken as the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heavy
