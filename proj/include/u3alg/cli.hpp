#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace u3alg::cli {

// Exit codes: 0 all checks pass, 1 some check failed, 2 invalid parameters.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// "A..B" or "A"; throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace u3alg::cli
