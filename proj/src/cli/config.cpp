#include "mucb/cli/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

namespace mucb::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  if (trim(text).empty()) throw ConfigError{std::string(key) + ": empty list"};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    T value{};
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size())
      throw ConfigError{std::string(key) + ": cannot parse '" + std::string(item) + "'"};
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<double> parse_double_list(std::string_view key, std::string_view text) {
  return parse_list<double>(key, text);
}

std::vector<std::uint64_t> parse_uint_list(std::string_view key, std::string_view text) {
  return parse_list<std::uint64_t>(key, text);
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError{"config: cannot open '" + path + "'"};
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = line;
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    const auto eq = v.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError{"config: line " + std::to_string(lineno) + " is not key=value"};
    const auto key = trim(v.substr(0, eq));
    if (key.empty()) throw ConfigError{"config: line " + std::to_string(lineno) + " has an empty key"};
    out.emplace_back(std::string(key), std::string(trim(v.substr(eq + 1))));
  }
  return out;
}

unsigned threads_from_env() {
  const char* env = std::getenv("MUCB_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  unsigned value = 0;
  const std::string_view s(env);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError{"MUCB_THREADS: expected a nonnegative integer, got '" + std::string(s) + "'"};
  return value;
}

}  // namespace mucb::cli
