#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liext::cli {

// args excludes the program name. Exit codes: 0 success / condition holds,
// 1 condition fails, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Default corpus location baked in at build time.
std::string default_fixture_dir();

}  // namespace liext::cli
