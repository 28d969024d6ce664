#include "turanhull/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace turanhull {

std::uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > kMaxEnumeratedGraphOrder)
    throw std::invalid_argument("labeled graph enumeration order " + std::to_string(n) + " outside [1, 7]");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t index) {
  if (index >= labeled_graph_count(n)) throw std::out_of_range("labeled graph index out of range");
  Graph g(n);
  int bit = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v, ++bit)
      if ((index >> bit) & 1U) g.add_edge(u, v);
  return g;
}

void enumerate_labeled_graphs(int n, const std::function<void(std::uint64_t, const Graph&)>& fn, IndexRange range) {
  const std::uint64_t total = labeled_graph_count(n);
  const std::uint64_t end = std::min(range.end, total);
  for (std::uint64_t i = range.begin; i < end; ++i) fn(i, labeled_graph(n, i));
}

namespace {

void check_complex_order(int n, bool long_run) {
  if (n < 1 || n > kLongRunComplexOrderCap)
    throw std::invalid_argument("complex enumeration order " + std::to_string(n) + " outside [1, 6]");
  if (n > kDefaultComplexOrderCap && !long_run)
    throw std::invalid_argument("complex enumeration at n = " + std::to_string(n) + " needs the long-run flag");
}

struct FamilyWalk {
  unsigned subsets;  // 2^n
  IndexRange range;
  const std::function<void(std::uint64_t, FamilyBits)>& fn;
  std::uint64_t index = 0;

  // Decides subsets in increasing mask order; every proper subset of S has a
  // smaller mask, so inclusion of S is allowed iff all S \ {x} are included.
  // Returns false once range.end is reached.
  bool walk(unsigned s, FamilyBits family) {
    if (s == subsets) {
      if (index >= range.end) return false;
      if (index >= range.begin) fn(index, family);
      ++index;
      return true;
    }
    if (!walk(s + 1, family)) return false;
    bool allowed = true;
    for (unsigned m = s; m != 0 && allowed; m &= m - 1) {
      const unsigned below = s & ~(m & (~m + 1));
      if (((family >> below) & 1U) == 0) allowed = false;
    }
    if (allowed) return walk(s + 1, family | (FamilyBits{1} << s));
    return true;
  }
};

}  // namespace

SimplicialComplex complex_from_family(int n, FamilyBits family) {
  if (n < 0 || n > kLongRunComplexOrderCap) throw std::invalid_argument("family bits hold ground sets of size <= 6 only");
  std::vector<Face> faces;
  for (FamilyBits m = family; m != 0; m &= m - 1) faces.push_back(Face::from_mask(static_cast<std::uint64_t>(std::countr_zero(m))));
  return SimplicialComplex::from_faces(n, std::move(faces));
}

FamilyBits family_of(const SimplicialComplex& c) {
  if (c.ground_size() > kLongRunComplexOrderCap) throw std::invalid_argument("family bits hold ground sets of size <= 6 only");
  FamilyBits bits = 0;
  for (Face f : c.faces()) bits |= FamilyBits{1} << f.mask();
  return bits;
}

std::uint64_t enumerate_complex_families(int n, bool long_run, const std::function<void(std::uint64_t, FamilyBits)>& fn,
                                         IndexRange range) {
  check_complex_order(n, long_run);
  FamilyWalk walk{1U << n, range, fn};
  walk.walk(0, 0);
  return walk.index;
}

std::uint64_t enumerate_complexes(int n, bool long_run, const std::function<void(std::uint64_t, const SimplicialComplex&)>& fn,
                                  IndexRange range) {
  return enumerate_complex_families(
      n, long_run, [&](std::uint64_t i, FamilyBits family) { fn(i, complex_from_family(n, family)); }, range);
}

std::uint64_t complex_family_count(int n, bool long_run) {
  return enumerate_complex_families(n, long_run, [](std::uint64_t, FamilyBits) {});
}

namespace {

FamilyBits closure_of(const std::vector<unsigned>& antichain) {
  FamilyBits family = 0;
  for (unsigned top : antichain)
    for (unsigned s = top;; s = (s - 1) & top) {
      family |= FamilyBits{1} << s;
      if (s == 0) break;
    }
  return family;
}

void grow_antichains(unsigned subsets, unsigned next, std::vector<unsigned>& chosen, std::vector<FamilyBits>& out) {
  out.push_back(closure_of(chosen));
  for (unsigned s = next; s < subsets; ++s) {
    bool comparable = false;
    for (unsigned t : chosen)
      if ((s & t) == s || (s & t) == t) comparable = true;
    if (comparable) continue;
    chosen.push_back(s);
    grow_antichains(subsets, s + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<FamilyBits> antichain_families(int n) {
  if (n < 0 || n > kLongRunComplexOrderCap) throw std::invalid_argument("antichain enumeration order outside [0, 6]");
  std::vector<FamilyBits> out;
  std::vector<unsigned> chosen;
  grow_antichains(1U << n, 0, chosen, out);
  return out;
}

}  // namespace turanhull
