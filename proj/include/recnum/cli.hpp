#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recnum {

// Runs one subcommand. args excludes the program name. Results go to out
// (or the path given via --out), diagnostics to err. Returns the process
// exit status: 0 success, 1 resource or parse failure, 2 usage or domain
// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace recnum
