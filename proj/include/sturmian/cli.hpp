#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sturmian::cli {

// Dispatches the sturmian subcommands; args excludes the program name.
// Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sturmian::cli
