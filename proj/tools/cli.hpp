#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hb::cli {

/// Runs one hbtool invocation. args excludes the program name.
/// Exit codes: 0 success, 1 invalid input, 2 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hb::cli
