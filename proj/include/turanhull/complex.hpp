#pragma once

#include <span>
#include <vector>

#include "turanhull/face.hpp"
#include "turanhull/graph.hpp"
#include "turanhull/int_vector.hpp"

namespace turanhull {

/// Downward-closed family of faces on the ground set {1..n}, n <= 64.
///
/// The full face set is stored, sorted by mask. A nonempty complex always
/// contains the empty face; the void complex (no faces at all) is only made
/// through void_complex(). Face vectors never count the empty face.
class SimplicialComplex {
 public:
  /// Downward closure of facets, always including the empty face. Throws
  /// std::invalid_argument for labels outside [1, n] and std::length_error
  /// if the closure would exceed kMaxFaces faces.
  static SimplicialComplex from_facets(int n, std::span<const Face> facets);
  /// Wraps an explicit face list; throws std::invalid_argument unless it is downward closed.
  static SimplicialComplex from_faces(int n, std::vector<Face> faces);
  static SimplicialComplex void_complex(int n);

  static constexpr std::size_t kMaxFaces = std::size_t{1} << 24;

  int ground_size() const { return n_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  bool is_void() const { return faces_.empty(); }
  bool contains(Face f) const;
  /// Labels v with {v} a face.
  VertexSet vertices() const;
  /// Inclusion-maximal faces, sorted by mask.
  std::vector<Face> facets() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int n, std::vector<Face> sorted_faces) : n_(n), faces_(std::move(sorted_faces)) {}

  int n_ = 0;
  std::vector<Face> faces_;
};

/// Entry k = number of faces with k vertices, k = 1..n.
IntVector face_vector(const SimplicialComplex& c);

/// {F : v not in F, F u {v} in c}; contains the empty face. Throws std::invalid_argument if {v} is not a face.
SimplicialComplex link(const SimplicialComplex& c, int v);

/// Faces of c contained in w. The result is on the same ground set.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexSet w);

/// Faces of c with at most k vertices.
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

/// Graph on {1..n} whose edges are the two-vertex faces.
Graph underlying_graph(const SimplicialComplex& c);

/// Complex whose faces are the cliques of g (including the empty face and the singletons).
SimplicialComplex clique_complex(const Graph& g);

/// Adds every face with at least min_size vertices whose whole boundary is already present, to a fixed point.
SimplicialComplex fill_boundaries(const SimplicialComplex& c, int min_size);

}  // namespace turanhull
