#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fria::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFault = 1;
inline constexpr int kNonConforming = 2;

// Runs the `fria` command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fria::cli
