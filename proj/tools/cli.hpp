#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hrgpg::cli {

// Exit codes: 0 ok, 1 domain negative (violation, conflict, reject),
// 2 usage or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrgpg::cli
