#ifndef CSPCD_TOOLS_CLI_HPP
#define CSPCD_TOOLS_CLI_HPP

#include <string>
#include <vector>

namespace cspcd::cli {

/// Parse argv (without the program name) and run the selected subcommand.
/// Returns 0 on success, 2 on usage errors, 1 on runtime errors.
int run_cli(const std::vector<std::string>& args);

} // namespace cspcd::cli

#endif
