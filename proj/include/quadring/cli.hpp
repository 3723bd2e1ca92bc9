#pragma once

/// Command-line front end. run() is the whole program minus main(): it
/// parses args (without the program name), writes results to `out` and
/// diagnostics to `err`, and returns the process exit code:
///   0  success
///   1  a verification that was asked for failed
///   2  usage error (bad flags, malformed input, violated precondition)

#include <iosfwd>
#include <string>
#include <vector>

namespace quadring::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadring::cli
