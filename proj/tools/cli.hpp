// cli.hpp — the specsat command line, callable from tests.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specsat::cli {

/// Exit codes: 0 pass or report, 1 a check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// argv without the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace specsat::cli
