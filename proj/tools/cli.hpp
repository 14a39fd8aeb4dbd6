#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiw::cli {

enum Exit { ok = 0, check_failed = 1, bad_input = 2, resource_cap = 3 };

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiw::cli
