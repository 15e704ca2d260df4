#ifndef SPG_CLI_HPP
#define SPG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace spg::cli {

/// Runs one command. `args` excludes the program name. Exit codes: 0 success,
/// 1 domain failure (error name on `err`) or a requested check failing,
/// 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spg::cli

#endif  // SPG_CLI_HPP
