#pragma once

// Command-line front end. Every subcommand is a thin wrapper over the
// library; run() is separated from main() so tests can drive it directly.
// Exit codes: 0 success, 1 negative answer to a yes/no question, 2 input
// error.

#include <iosfwd>
#include <string>
#include <vector>

namespace wph::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wph::cli
