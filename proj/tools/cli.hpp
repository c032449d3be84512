#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cuboid::cli {

/// Exit codes: 0 success, 1 domain or verification failure, 2 I/O or parse failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuboid::cli
