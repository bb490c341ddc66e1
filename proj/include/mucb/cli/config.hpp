#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mucb::cli {

// Thrown for malformed configuration; exits with code 2.
struct ConfigError {
  std::string message;
};

std::vector<double> parse_double_list(std::string_view key, std::string_view text);
std::vector<std::uint64_t> parse_uint_list(std::string_view key, std::string_view text);

/// Flat `key = value` file: one pair per line, '#' starts a comment, blank
/// lines ignored. Keys are long flag names without the leading dashes.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

// MUCB_THREADS: 0 or unset means one worker per hardware thread.
unsigned threads_from_env();

}  // namespace mucb::cli
