#pragma once

#include <vector>

#include "turanhull/graph.hpp"
#include "turanhull/int_vector.hpp"

namespace turanhull {

/// Part sizes of T(n, r), largest first. r > n is treated as r = n (n singleton parts).
std::vector<int> turan_parts(int n, int r);

/// Complete multipartite graph with turan_parts(n, r); parts occupy contiguous
/// label blocks, larger parts first.
Graph turan_graph(int n, int r);

/// t_k(n, r) for k = 1..n: the elementary symmetric polynomials of the part sizes.
/// Throws std::overflow_error if an entry does not fit in 64 bits.
IntVector turan_clique_vector(int n, int r);

/// Elementary symmetric polynomials e_1..e_d of the given part sizes, exact. Throws std::overflow_error.
IntVector elementary_symmetric(const std::vector<int>& parts, std::size_t d);

}  // namespace turanhull
