#ifndef WITKIT_CLI_HPP
#define WITKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace witkit {

/// Dispatches the command line. Exit codes: 0 success / certified,
/// 1 malformed input, 2 negative verdict (not certified, validation failed).
/// Reports go to `out` as JSON; diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace witkit

#endif
