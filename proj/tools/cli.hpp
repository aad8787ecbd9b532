#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridlock::cli {

// Exit codes: 0 pass/holds/agree, 1 violation or counterexample found,
// 2 usage or parse error, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridlock::cli
