#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "turanhull/complex.hpp"
#include "turanhull/graph.hpp"

namespace turanhull {

/// Half-open range of enumeration indices.
struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = std::numeric_limits<std::uint64_t>::max();
};

inline constexpr int kMaxEnumeratedGraphOrder = 7;
inline constexpr int kDefaultComplexOrderCap = 5;
inline constexpr int kLongRunComplexOrderCap = 6;

/// 2^C(n,2). Throws std::invalid_argument unless 1 <= n <= 7.
std::uint64_t labeled_graph_count(int n);

/// The labeled graph with the given index: bit b of index is the b-th vertex
/// pair in lexicographic order (1,2), (1,3), ..., (n-1,n).
Graph labeled_graph(int n, std::uint64_t index);

/// Calls fn(index, graph) for every labeled graph on {1..n} with index in range.
void enumerate_labeled_graphs(int n, const std::function<void(std::uint64_t, const Graph&)>& fn, IndexRange range = {});

// A downward-closed family on {1..n} with n <= 6 fits in one word: bit S is
// set when the subset with mask S is a face.
using FamilyBits = std::uint64_t;

SimplicialComplex complex_from_family(int n, FamilyBits family);
FamilyBits family_of(const SimplicialComplex& c);

/// Walks every downward-closed family on {1..n} (including the void family)
/// in a fixed depth-first order, numbering them from 0, and calls fn(index,
/// family) for indices in range. Returns the total number of families when
/// the range covers the end, otherwise the number walked up to range.end.
/// Throws std::invalid_argument for n outside [1, 5], or n = 6 without long_run.
std::uint64_t enumerate_complex_families(int n, bool long_run, const std::function<void(std::uint64_t, FamilyBits)>& fn,
                                         IndexRange range = {});

/// Same walk, materializing complexes.
std::uint64_t enumerate_complexes(int n, bool long_run, const std::function<void(std::uint64_t, const SimplicialComplex&)>& fn,
                                  IndexRange range = {});

/// Number of downward-closed families on {1..n}, counted by the walk.
std::uint64_t complex_family_count(int n, bool long_run);

/// Independent route: enumerates antichains of subsets of {1..n} and returns
/// the downward closure of each (n <= 6).
std::vector<FamilyBits> antichain_families(int n);

}  // namespace turanhull
