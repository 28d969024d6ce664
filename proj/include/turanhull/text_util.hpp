#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace turanhull::detail {

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

/// Non-blank, non-'#' lines with surrounding whitespace stripped.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') out.push_back({line, number});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

/// Whitespace-separated tokens.
inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

inline std::optional<long long> to_integer(std::string_view s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// Parses a "n=<int>" header; nullopt if the line is not a header.
inline std::optional<long long> header_order(std::string_view line) {
  std::string compact;
  for (char c : line)
    if (c != ' ' && c != '\t') compact += c;
  if (compact.size() < 3 || compact[0] != 'n' || compact[1] != '=') return std::nullopt;
  return to_integer(std::string_view(compact).substr(2));
}

}  // namespace turanhull::detail
