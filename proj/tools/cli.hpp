#ifndef MULTIPORT_TOOLS_CLI_HPP
#define MULTIPORT_TOOLS_CLI_HPP

#include <iosfwd>

namespace multiport::cli {

/// Parses argv and runs one subcommand. Results go to `out` (or the file
/// named by --output), diagnostics to `err`. Returns 0 on success, 1 on
/// capacity or convergence failures, 2 on validation errors (including
/// malformed JSON and bad flags).
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace multiport::cli

#endif
