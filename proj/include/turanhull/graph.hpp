#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "turanhull/face.hpp"
#include "turanhull/int_vector.hpp"

namespace turanhull {

/// Simple undirected graph on vertices {1..n}, n <= 64. No loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n (0 <= n <= 64).
  explicit Graph(int n);
  static Graph complete(int n);
  /// Throws on out-of-range labels or loops.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  VertexSet vertices() const { return Face::range(n_); }

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Open neighborhood of u. Throws std::out_of_range for u outside [1, n].
  VertexSet neighbors(int u) const;
  int degree(int u) const { return neighbors(u).size(); }
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Raw neighbor mask of u; no range check.
  std::uint64_t adjacency_mask(int u) const { return adj_[static_cast<std::size_t>(u - 1)]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int u) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxLabel> adj_{};
};

/// c_k(G) for k = 1..n (length n).
IntVector clique_vector(const Graph& g);

/// Largest k with c_k(G) > 0; 0 for the graph of order 0.
int clique_number(const Graph& g);

inline VertexSet neighborhood(const Graph& g, int u) { return g.neighbors(u); }

/// Induced subgraph relabeled to 1..|W|; labels[i] is the original label of vertex i+1.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);

/// A proper coloring with colors in 1..r (indexed by vertex label - 1), or nullopt if none exists.
std::optional<std::vector<int>> is_r_colorable(const Graph& g, int r);

/// True if colors is a proper coloring of g using only colors 1..r.
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int r);

/// Join of h with an independent set of m new vertices, labeled |V(h)|+1 .. |V(h)|+m.
Graph join_with_independent_set(const Graph& h, int m);

}  // namespace turanhull
