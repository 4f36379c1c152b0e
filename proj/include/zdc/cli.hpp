#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zdc::cli {

// Exit status: 0 success, 1 data error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdc::cli
