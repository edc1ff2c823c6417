#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvcert {

/// Command dispatch for the solvcert tool; `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.  Exit codes: 0 success,
/// 1 negative verdict, 2 invalid input, 3 unsupported case.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace solvcert
