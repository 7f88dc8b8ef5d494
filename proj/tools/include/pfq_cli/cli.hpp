#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfq::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line (arguments after the program name); returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// Every id accepted by `verify`.
std::vector<std::string> verify_ids();

}  // namespace pfq::cli
