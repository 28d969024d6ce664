#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace turanhull {

/// Largest vertex label a face (or vertex set) can hold.
inline constexpr int kMaxLabel = 64;

/// A finite set of vertex labels in {1..64}, stored as a bit mask (label v is bit v-1).
///
/// Used both for faces of a complex and for plain vertex sets (neighborhoods,
/// cliques, parts of a multipartite graph). The empty face is the zero mask.
class Face {
 public:
  constexpr Face() = default;
  static constexpr Face from_mask(std::uint64_t mask) { return Face(mask); }

  /// Throws std::invalid_argument on duplicate labels or labels outside [1, 64].
  static Face from_labels(std::span<const int> labels);
  static Face from_labels(std::initializer_list<int> labels) {
    return from_labels(std::span<const int>(labels.begin(), labels.size()));
  }
  /// {1..n}
  static Face range(int n);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return v >= 1 && v <= kMaxLabel && ((mask_ >> (v - 1)) & 1U) != 0; }
  constexpr bool is_subset_of(Face other) const { return (mask_ & ~other.mask_) == 0; }
  /// Smallest label; 0 for the empty set.
  constexpr int min_label() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }
  /// Largest label; 0 for the empty set.
  constexpr int max_label() const { return mask_ == 0 ? 0 : kMaxLabel - std::countl_zero(mask_); }

  Face with(int v) const;
  Face without(int v) const;
  constexpr Face operator|(Face o) const { return Face(mask_ | o.mask_); }
  constexpr Face operator&(Face o) const { return Face(mask_ & o.mask_); }
  /// Set difference.
  constexpr Face operator-(Face o) const { return Face(mask_ & ~o.mask_); }

  /// Labels in increasing order.
  std::vector<int> labels() const;
  /// "{1,2,3}"
  std::string to_string() const;

  friend constexpr bool operator==(Face, Face) = default;
  friend constexpr auto operator<=>(Face a, Face b) { return a.mask_ <=> b.mask_; }

 private:
  constexpr explicit Face(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

using VertexSet = Face;

/// Calls fn(label) for each label of s in increasing order.
template <typename Fn>
void for_each_label(Face s, Fn&& fn) {
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) fn(std::countr_zero(m) + 1);
}

}  // namespace turanhull
