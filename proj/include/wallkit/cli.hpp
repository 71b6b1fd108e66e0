#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wallkit::cli {

// Runs one invocation. Exit codes: 0 success, 1 verification failure,
// 2 input error (malformed files, bad flags, unknown subcommands).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wallkit::cli
