#ifndef POLYRED_TOOLS_CLI_HPP
#define POLYRED_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polyred::cli {

/// Runs one command line (without the program name). Returns 0 when every
/// check passed, 1 when a check failed, 2 on usage or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyred::cli

#endif  // POLYRED_TOOLS_CLI_HPP
