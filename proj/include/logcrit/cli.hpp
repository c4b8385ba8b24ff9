#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logcrit {

// Full command-line driver, callable in-process (tests run it on strings).
// Subcommands: analyze, index, laguerre, sigma-min, verify, fuzz.
// Exit codes: 0 success (verified / premise-not-met / no witness),
// 1 at least one violation, 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace logcrit
