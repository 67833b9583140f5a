#ifndef INTQUANT_CLI_HPP
#define INTQUANT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace intquant {

// Full command-line front end.  `args` excludes the program name.  Normal
// output goes to `out` (or the --out file), diagnostics to `err`.
// Exit codes: 0 success / help, 1 usage, 2 data, 3 numeric or moment error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// "start:stop:step", stop included when (stop-start)/step is integral to
// within 1e-9 relative.  Exposed for tests.
std::vector<double> parse_grid(const std::string& spec, const std::string& flag);

}  // namespace intquant

#endif
