#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace floorprime::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_mismatch = 2;

/// Run one subcommand. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floorprime::cli
