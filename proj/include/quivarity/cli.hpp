#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quivarity::cli {

/// Runs the command-line frontend. `args` excludes the program name.
/// Exit codes: 0 success (classify: coregular), 2 classify: not coregular,
/// 3 parse/validation error, 4 invalid decomposition, 1 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivarity::cli
