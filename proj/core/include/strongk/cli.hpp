#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace strongk {

/// Runs the command-line front end.  Exit codes: 0 ok, 2 parse error,
/// 3 caps exceeded, 4 invalid parameters, 1 anything else (including FAIL
/// lines from explore).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace strongk
