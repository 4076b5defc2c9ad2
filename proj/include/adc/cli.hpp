#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adc {

// Command-line front end. args excludes the program name. Exit codes:
// 0 ok, 1 domain error, 2 parse error.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace adc
