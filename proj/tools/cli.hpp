#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uipc::cli {

// Exit codes: 0 success or provable, 1 refuted or violation found, 2 usage,
// parse or contract error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uipc::cli
