#pragma once

#include <iosfwd>

namespace critgraph {

// Runs one subcommand. Exit codes: 0 success, 1 domain error (bad graph,
// guard violation, oracle mismatch), 2 usage error. Results go to out,
// messages to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace critgraph
