#include "turanhull/face.hpp"

#include <stdexcept>

namespace turanhull {

namespace {

void check_label(int v) {
  if (v < 1 || v > kMaxLabel)
    throw std::invalid_argument("vertex label " + std::to_string(v) + " outside [1, 64]");
}

}  // namespace

Face Face::from_labels(std::span<const int> labels) {
  std::uint64_t mask = 0;
  for (int v : labels) {
    check_label(v);
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if ((mask & bit) != 0) throw std::invalid_argument("duplicate vertex label " + std::to_string(v));
    mask |= bit;
  }
  return Face(mask);
}

Face Face::range(int n) {
  if (n < 0 || n > kMaxLabel) throw std::invalid_argument("vertex range size " + std::to_string(n) + " outside [0, 64]");
  return Face(n == kMaxLabel ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

Face Face::with(int v) const {
  check_label(v);
  return Face(mask_ | (std::uint64_t{1} << (v - 1)));
}

Face Face::without(int v) const {
  check_label(v);
  return Face(mask_ & ~(std::uint64_t{1} << (v - 1)));
}

std::vector<int> Face::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_label(*this, [&](int v) { out.push_back(v); });
  return out;
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each_label(*this, [&](int v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  return s + "}";
}

}  // namespace turanhull
