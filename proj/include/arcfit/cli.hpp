#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcfit {

// Full command-line front end; args exclude the program name. Returns the
// process exit status (0 iff no error payload was emitted).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcfit
