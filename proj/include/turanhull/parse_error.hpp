#pragma once

#include <stdexcept>
#include <string>

namespace turanhull {

/// Malformed textual input. line is 1-based (0 when not line-oriented); offset is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error(describe(what, line, offset)), line_(line), offset_(offset) {}

  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  static std::string describe(const std::string& what, std::size_t line, std::size_t offset) {
    if (line > 0) return "line " + std::to_string(line) + ": " + what;
    return "offset " + std::to_string(offset) + ": " + what;
  }

  std::size_t line_;
  std::size_t offset_;
};

}  // namespace turanhull
