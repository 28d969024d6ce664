#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "turanhull/complex.hpp"
#include "turanhull/graph.hpp"

namespace turanhull {

// ---------------------------------------------------------------------------
// Graph operators

/// G_{u->v}: u loses all its edges and is joined to every neighbor of v.
/// Requires u != v and u, v non-adjacent (std::invalid_argument otherwise).
Graph zykov_shift(const Graph& g, int u, int v);

/// Both sides of c_k(G_{u->v}) = c_k(G) - c_{k-1}(G[N(u)]) + c_{k-1}(G[N(v)]),
/// each computed independently (c_0 of any graph is 1).
struct CliqueDelta {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};
CliqueDelta zykov_clique_delta(const Graph& g, int u, int v, int k);

struct TraceStep {
  std::string op;
  int u = 0;
  int v = 0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};
using Trace = std::vector<TraceStep>;

/// [{"op": name, "u": int, "v": int}, ...]
nlohmann::json trace_to_json(const Trace& trace);

/// Parts of a complete multipartite graph (each part an independent set,
/// every cross pair adjacent), sorted by decreasing size then smallest label;
/// nullopt if g is not complete multipartite.
std::optional<std::vector<VertexSet>> multipartite_parts(const Graph& g);
inline bool is_complete_multipartite(const Graph& g) { return multipartite_parts(g).has_value(); }

struct Symmetrization {
  Graph graph;
  Trace trace;
  int rounds = 0;
};

/// Repeated Zykov shifting until the graph is complete multipartite.
///
/// Each round picks, among the not-yet-settled vertices with a non-neighbor
/// there, one of maximum degree (smallest label on ties) and shifts every
/// non-neighbor of it onto it in ascending label order. The picked vertex and
/// its non-neighbors then form a finished part. Every round settles at least
/// two vertices, so rounds <= n / 2. Shifts that change nothing (the vertex
/// already has the target's neighborhood) are not recorded in the trace.
Symmetrization symmetrize_to_multipartite(const Graph& g);

/// Bound on symmetrize_to_multipartite rounds for order n.
constexpr int symmetrization_round_bound(int n) { return n / 2; }

struct Balancing {
  Graph graph;
  Trace trace;
};

/// Rebalances a complete multipartite graph into a Turán graph with the same
/// number of parts. While a part I1 = {w_1..w_m} and a part I2 = {z_1..z_l}
/// have m - 2 >= l, w_m trades its edges to z_1..z_l for edges to w_1..w_l
/// (an isomorphic copy) and is then shifted onto z_1. Throws
/// std::invalid_argument if g is not complete multipartite.
Balancing balance_multipartite(const Graph& g);

// ---------------------------------------------------------------------------
// Complex operators

/// Delta_{u->target}: drop every face properly containing u and add F + u for
/// every F in link(target). Requires {u}, {target} faces, u != target and no
/// face containing both (std::invalid_argument otherwise).
SimplicialComplex complex_shift(const SimplicialComplex& c, int u, int target);

/// Result of shifting every non-neighbor of target onto it, in ascending label order.
struct LambdaConstruction {
  SimplicialComplex lambda;
  int target = 0;
  std::vector<int> shifted;
  /// 1 + number of shifted vertices.
  int m = 0;
  /// link(lambda, target)
  SimplicialComplex link;
  /// lambda restricted to the vertices of the link.
  SimplicialComplex induced;
};
LambdaConstruction shift_non_neighbors_onto(const SimplicialComplex& c, int target);

// ---------------------------------------------------------------------------
// Color-shiftedness

/// Residue class of label v among classes 1..r (class r holds the multiples of r).
constexpr int residue_class(int v, int r) { return (v - 1) % r + 1; }

/// A k-subset with at most one element in each residue class modulo r.
class ColoredKSubset {
 public:
  /// Throws std::invalid_argument if two elements share a residue class.
  ColoredKSubset(Face face, int r);
  static bool is_colored(Face face, int r);

  Face face() const { return face_; }
  int colors() const { return r_; }
  std::size_t size() const { return static_cast<std::size_t>(face_.size()); }
  /// Residue classes of the sorted elements.
  std::vector<int> residues() const;

 private:
  Face face_;
  int r_;
};

/// T <_p S: t_i <= s_i for the sorted elements. Throws std::invalid_argument on a size mismatch.
bool dominance_order(const ColoredKSubset& t, const ColoredKSubset& s);

struct ShiftednessResult {
  bool shifted = true;
  /// (T, S) with S in the family, T <_p S, T colored, T missing.
  std::optional<std::pair<Face, Face>> witness;
};

/// Whether family (k-subsets, all r-colored) is closed downward under <_p inside M(k, r).
/// Throws std::invalid_argument if a member has the wrong size or is not r-colored.
ShiftednessResult is_color_shifted(std::span<const Face> family, int k, int r);

/// Applies the family test to every face size of c. Faces that are not r-colored
/// make the complex not color shifted; they are reported as the witness (T = S).
ShiftednessResult is_color_shifted(const SimplicialComplex& c, int r);

}  // namespace turanhull
