#pragma once

// Command-line front end. Every subcommand prints one JSON report
//   {command, inputs, values, verdicts, precision}
// on `out` and a short summary on `err`.
// Exit codes: 0 when every verdict passes, 1 when a verdict fails (or an
// integration does not converge, or a period is not real), 2 for malformed
// input or arguments and for inputs outside an operation's domain.

#include <ostream>
#include <string>
#include <vector>

namespace scg::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scg::cli
