#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sposet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;  // library error, e.g. NotBuchsbaum
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailed = 3;  // a reported verification is false

/// Entry point of the command-line tool; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sposet::cli
