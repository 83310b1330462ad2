#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skoslint::cli {

// Exit codes: 0 = ran, no issues; 1 = ran, issues found; 2 = usage or
// parse error; 3 = runtime failure. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skoslint::cli
