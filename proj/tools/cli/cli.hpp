#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace antiassoc::cli {

/// Runs one subcommand (args exclude the program name). The report goes to
/// out as JSON; diagnostics go to err. Returns 0 on success, 1 on domain
/// errors, 2 on malformed input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antiassoc::cli
