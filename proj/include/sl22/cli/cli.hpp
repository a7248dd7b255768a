#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl22::cli {

inline constexpr const char* kVersion = "0.1.0";

// Full command line (args[0] is the program name). Returns the process exit code:
// 0 all selected checks pass, 1 some check fails, 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl22::cli
