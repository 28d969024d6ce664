#include "turanhull/turan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace turanhull {

namespace {

void check_params(int n, int r) {
  if (n < 1) throw std::invalid_argument("Turán order must be positive, got " + std::to_string(n));
  if (r < 1) throw std::invalid_argument("Turán part count must be positive, got " + std::to_string(r));
}

}  // namespace

std::vector<int> turan_parts(int n, int r) {
  check_params(n, r);
  const int p = std::min(n, r);
  std::vector<int> parts(static_cast<std::size_t>(p), n / p);
  for (int i = 0; i < n % p; ++i) ++parts[static_cast<std::size_t>(i)];
  return parts;
}

Graph turan_graph(int n, int r) {
  if (n > kMaxLabel) throw std::invalid_argument("Turán graph order " + std::to_string(n) + " exceeds 64");
  const auto parts = turan_parts(n, r);
  std::vector<int> block(static_cast<std::size_t>(n));
  int v = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) block[static_cast<std::size_t>(v++)] = static_cast<int>(i);
  Graph g(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (block[static_cast<std::size_t>(a - 1)] != block[static_cast<std::size_t>(b - 1)]) g.add_edge(a, b);
  return g;
}

IntVector elementary_symmetric(const std::vector<int>& parts, std::size_t d) {
  // e[k] over the parts seen so far; each part adds e[k] += size * e[k-1].
  std::vector<std::uint64_t> e(d + 1, 0);
  e[0] = 1;
  for (int size : parts) {
    if (size < 0) throw std::invalid_argument("negative part size");
    for (std::size_t k = d; k >= 1; --k) {
      std::uint64_t term = 0;
      std::uint64_t sum = 0;
      if (__builtin_mul_overflow(static_cast<std::uint64_t>(size), e[k - 1], &term) || __builtin_add_overflow(e[k], term, &sum))
        throw std::overflow_error("elementary symmetric polynomial e_" + std::to_string(k) + " exceeds 64 bits");
      e[k] = sum;
    }
  }
  return IntVector(std::vector<std::uint64_t>(e.begin() + 1, e.end()));
}

IntVector turan_clique_vector(int n, int r) {
  return elementary_symmetric(turan_parts(n, r), static_cast<std::size_t>(n));
}

}  // namespace turanhull
