#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace suspflow::cli {

// Command dispatch; returns the process exit code.
// 0 = success, 1 = usage/parse error, 2 = domain error (one-line
// machine-parsable code on stderr).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suspflow::cli
