#include "turanhull/int_vector.hpp"

#include <charconv>
#include <stdexcept>

namespace turanhull {

std::uint64_t IntVector::at(std::size_t k) const {
  if (k < 1 || k > entries_.size())
    throw std::out_of_range("index " + std::to_string(k) + " outside [1, " + std::to_string(entries_.size()) + "]");
  return entries_[k - 1];
}

std::uint64_t& IntVector::at(std::size_t k) {
  if (k < 1 || k > entries_.size())
    throw std::out_of_range("index " + std::to_string(k) + " outside [1, " + std::to_string(entries_.size()) + "]");
  return entries_[k - 1];
}

std::size_t IntVector::support() const {
  std::size_t s = 0;
  while (s < entries_.size() && entries_[s] > 0) ++s;
  return s;
}

bool IntVector::has_zero_tail_form() const {
  for (std::size_t k = support(); k < entries_.size(); ++k)
    if (entries_[k] != 0) return false;
  return true;
}

IntVector IntVector::trimmed() const {
  std::size_t d = entries_.size();
  while (d > 0 && entries_[d - 1] == 0) --d;
  return resized(d);
}

IntVector IntVector::resized(std::size_t d) const {
  std::vector<std::uint64_t> out(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(std::min(d, entries_.size())));
  out.resize(d, 0);
  return IntVector(std::move(out));
}

std::string IntVector::to_string() const {
  const IntVector t = trimmed();
  std::string s;
  for (std::size_t i = 0; i < t.entries_.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(t.entries_[i]);
  }
  return s;
}

IntVector parse_int_vector(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::size_t b = pos, e = end;
    while (b < e && text[b] == ' ') ++b;
    while (e > b && text[e - 1] == ' ') --e;
    if (b == e) throw std::invalid_argument("empty entry at offset " + std::to_string(pos) + " in vector \"" + text + "\"");
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e, value);
    if (ec != std::errc{} || ptr != text.data() + e)
      throw std::invalid_argument("not a nonnegative integer at offset " + std::to_string(b) + " in vector \"" + text + "\"");
    out.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return IntVector(std::move(out));
}

}  // namespace turanhull
