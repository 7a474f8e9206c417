#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace legknot::cli {

// Exit codes: 0 success, 2 parse error, 3 domain error, 4 undetermined.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legknot::cli
