#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cdo::cli {

/// Exit codes: 0 verified, 1 verification failure, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdo::cli
