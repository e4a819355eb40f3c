#ifndef BOMEGA_TOOLS_CLI_HPP_
#define BOMEGA_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "bomega/tabulated.hpp"

namespace bomega::cli {

/// Parses the argument vector (without the program name), runs the requested
/// verb and writes its output. Returns the process exit code: 0 on success,
/// 1 when a verification verb fails, 2 on unusable input.
int parse_and_dispatch(const std::vector<std::string>& args,
                       std::ostream& out, std::ostream& err);

/// Loads a table file {"N":..., "entries":[{"x":{...},"fx":{...}},...]},
/// validating totality over the window at load time.
TabulatedEndo load_table(const std::string& path);

/// Serializes a table in the load_table file format.
std::string table_to_json(const TabulatedEndo& table);

}  // namespace bomega::cli

#endif  // BOMEGA_TOOLS_CLI_HPP_
