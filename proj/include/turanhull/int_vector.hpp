#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace turanhull {

/// Nonnegative integer vector indexed by cardinality k = 1..d.
///
/// Houses face vectors (entry k = number of faces with k vertices), clique
/// vectors and Turán vectors. Indexing is 1-based and by cardinality, never by
/// dimension: entry 2 of a face vector is the edge count.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t d) : entries_(d, 0) {}
  IntVector(std::initializer_list<std::uint64_t> entries) : entries_(entries) {}
  explicit IntVector(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }

  /// Entry k, 1 <= k <= size(). Throws std::out_of_range otherwise.
  std::uint64_t at(std::size_t k) const;
  std::uint64_t& at(std::size_t k);
  /// Entry k with the conventions entry(0) = 1 and entry(k) = 0 past the end.
  std::uint64_t entry(std::size_t k) const {
    if (k == 0) return 1;
    return k <= entries_.size() ? entries_[k - 1] : 0;
  }

  /// Length of the leading run of positive entries.
  std::size_t support() const;
  /// True when no zero entry is followed by a positive one.
  bool has_zero_tail_form() const;
  /// Copy with trailing zeros removed.
  IntVector trimmed() const;
  /// Copy zero-padded (or cut) to length d.
  IntVector resized(std::size_t d) const;

  const std::vector<std::uint64_t>& entries() const { return entries_; }

  /// Space-separated entries with trailing zeros dropped ("6 12 8").
  std::string to_string() const;

  friend bool operator==(const IntVector&, const IntVector&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

/// Parses comma-separated nonnegative integers ("5,6,0"). Throws std::invalid_argument.
IntVector parse_int_vector(const std::string& text);

}  // namespace turanhull
