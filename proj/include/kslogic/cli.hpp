#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kslogic {

/// Runs the command line (args excludes the program name). Reports go to
/// out (or to --output), diagnostics to err. Returns the process exit
/// status: 0 success or affirmative verdict, 1 negative verdict, 2 usage,
/// parse or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kslogic
