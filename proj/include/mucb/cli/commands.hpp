#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mucb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Entry point shared by the `mucb` binary and tests. `args` excludes the
/// program name; the first element is the subcommand (run, compare, ldi).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mucb::cli
