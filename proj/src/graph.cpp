#include "turanhull/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <stdexcept>
#include <string>

namespace turanhull {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxLabel) throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
}

Graph Graph::complete(int n) {
  Graph g(n);
  const std::uint64_t all = g.vertices().mask();
  for (int u = 1; u <= n; ++u) g.adj_[static_cast<std::size_t>(u - 1)] = all & ~(std::uint64_t{1} << (u - 1));
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int u) const {
  if (u < 1 || u > n_) throw std::out_of_range("vertex " + std::to_string(u) + " outside [1, " + std::to_string(n_) + "]");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return ((adj_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1U) != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
  adj_[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u - 1)] &= ~(std::uint64_t{1} << (v - 1));
  adj_[static_cast<std::size_t>(v - 1)] &= ~(std::uint64_t{1} << (u - 1));
}

VertexSet Graph::neighbors(int u) const {
  check_vertex(u);
  return Face::from_mask(adj_[static_cast<std::size_t>(u - 1)]);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int u = 0; u < n_; ++u) twice += static_cast<std::size_t>(std::popcount(adj_[static_cast<std::size_t>(u)]));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    const std::uint64_t later = adj_[static_cast<std::size_t>(u - 1)] & ~((std::uint64_t{2} << (u - 1)) - 1);
    for_each_label(Face::from_mask(later), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

namespace {

using BinomialRow = std::array<std::uint64_t, kMaxLabel + 1>;

const std::array<BinomialRow, kMaxLabel + 1>& binomials() {
  static const auto table = [] {
    std::array<BinomialRow, kMaxLabel + 1> t{};
    for (std::size_t n = 0; n <= kMaxLabel; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

// Pivoting clique counter. Every clique is a set of "held" vertices plus any
// subset of the "pivot" vertices collected along exactly one branch, so a leaf
// with h held and p pivots contributes C(p, j) cliques of size h + j.
class PivotCounter {
 public:
  PivotCounter(const Graph& g, std::vector<std::uint64_t>& counts) : g_(g), counts_(counts) {}

  void count(std::uint64_t candidates, int held, int pivots) {
    if (candidates == 0) {
      const auto& row = binomials()[static_cast<std::size_t>(pivots)];
      for (int j = held == 0 ? 1 : 0; j <= pivots; ++j) counts_[static_cast<std::size_t>(held + j - 1)] += row[static_cast<std::size_t>(j)];
      return;
    }
    int pivot = 0;
    int best = -1;
    for_each_label(Face::from_mask(candidates), [&](int u) {
      const int d = std::popcount(candidates & g_.adjacency_mask(u));
      if (d > best) {
        best = d;
        pivot = u;
      }
    });
    std::uint64_t rest = candidates;
    for_each_label(Face::from_mask(candidates & ~g_.adjacency_mask(pivot)), [&](int v) {
      const bool is_pivot = v == pivot;
      count(rest & g_.adjacency_mask(v), held + (is_pivot ? 0 : 1), pivots + (is_pivot ? 1 : 0));
      rest &= ~(std::uint64_t{1} << (v - 1));
    });
  }

 private:
  const Graph& g_;
  std::vector<std::uint64_t>& counts_;
};

}  // namespace

// No overflow guard: c_k <= C(n, k) <= C(64, 32) < 2^64.
IntVector clique_vector(const Graph& g) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.order()), 0);
  if (g.order() > 0) PivotCounter(g, counts).count(g.vertices().mask(), 0, 0);
  return IntVector(std::move(counts));
}

int clique_number(const Graph& g) { return static_cast<int>(clique_vector(g).trimmed().size()); }

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.is_subset_of(g.vertices())) throw std::out_of_range("vertex set " + w.to_string() + " not inside the graph");
  InducedSubgraph out{Graph(w.size()), w.labels()};
  for (std::size_t i = 0; i < out.labels.size(); ++i)
    for (std::size_t j = i + 1; j < out.labels.size(); ++j)
      if (g.adjacent(out.labels[i], out.labels[j])) out.graph.add_edge(static_cast<int>(i + 1), static_cast<int>(j + 1));
  return out;
}

namespace {

class Colorer {
 public:
  Colorer(const Graph& g, int r) : g_(g), r_(std::min(r, g.order())), color_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<std::vector<int>> run() {
    if (g_.order() == 0) return std::vector<int>{};
    if (r_ < 1) return std::nullopt;
    if (solve(0, 0)) return color_;
    return std::nullopt;
  }

 private:
  std::uint64_t forbidden(int v) const {
    std::uint64_t used = 0;
    for_each_label(g_.neighbors(v), [&](int w) {
      const int c = color_[static_cast<std::size_t>(w - 1)];
      if (c > 0) used |= std::uint64_t{1} << (c - 1);
    });
    return used;
  }

  // First-fail: branch on the uncolored vertex with the fewest admissible
  // colors, ties broken by larger degree, then smaller label. A new color may
  // only be opened as the next unused index.
  bool solve(int colored, int opened) {
    if (colored == g_.order()) return true;
    const int limit = std::min(r_, opened + 1);
    const std::uint64_t palette = limit >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << limit) - 1;
    int best = 0;
    int best_avail = INT_MAX;
    int best_degree = -1;
    std::uint64_t best_choices = 0;
    for (int v = 1; v <= g_.order(); ++v) {
      if (color_[static_cast<std::size_t>(v - 1)] != 0) continue;
      const std::uint64_t choices = palette & ~forbidden(v);
      const int avail = std::popcount(choices);
      const int deg = g_.degree(v);
      if (avail < best_avail || (avail == best_avail && deg > best_degree)) {
        best = v;
        best_avail = avail;
        best_degree = deg;
        best_choices = choices;
      }
    }
    if (best_avail == 0) return false;
    for (std::uint64_t m = best_choices; m != 0; m &= m - 1) {
      const int c = std::countr_zero(m) + 1;
      color_[static_cast<std::size_t>(best - 1)] = c;
      if (solve(colored + 1, std::max(opened, c))) return true;
    }
    color_[static_cast<std::size_t>(best - 1)] = 0;
    return false;
  }

  const Graph& g_;
  int r_;
  std::vector<int> color_;
};

}  // namespace

std::optional<std::vector<int>> is_r_colorable(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("color count must be positive");
  return Colorer(g, r).run();
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int r) {
  if (colors.size() != static_cast<std::size_t>(g.order())) return false;
  for (int c : colors)
    if (c < 1 || c > r) return false;
  for (const auto& [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u - 1)] == colors[static_cast<std::size_t>(v - 1)]) return false;
  return true;
}

Graph join_with_independent_set(const Graph& h, int m) {
  if (m < 1) throw std::invalid_argument("independent set size must be positive");
  const int n = h.order();
  Graph g(n + m);
  for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
  for (int w = n + 1; w <= n + m; ++w)
    for (int u = 1; u <= n; ++u) g.add_edge(u, w);
  return g;
}

}  // namespace turanhull
