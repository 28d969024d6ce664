#include "turanhull/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace turanhull {

namespace {

void sort_unique(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

void check_ground(int n) {
  if (n < 0 || n > kMaxLabel) throw std::invalid_argument("ground set size " + std::to_string(n) + " outside [0, 64]");
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::span<const Face> facets) {
  check_ground(n);
  const Face ground = Face::range(n);
  std::size_t total = 1;
  for (Face f : facets) {
    if (!f.is_subset_of(ground)) throw std::invalid_argument("facet " + f.to_string() + " has a label outside [1, " + std::to_string(n) + "]");
    if (f.size() > 24) throw std::length_error("facet " + f.to_string() + " is too large to close downward");
    total += std::size_t{1} << f.size();
    if (total > kMaxFaces) throw std::length_error("downward closure exceeds the face limit");
  }
  std::vector<Face> faces{Face{}};
  faces.reserve(total);
  for (Face f : facets) {
    // All submasks of f, including f and the empty set.
    const std::uint64_t m = f.mask();
    for (std::uint64_t s = m;; s = (s - 1) & m) {
      faces.push_back(Face::from_mask(s));
      if (s == 0) break;
    }
  }
  sort_unique(faces);
  return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<Face> faces) {
  check_ground(n);
  sort_unique(faces);
  const Face ground = Face::range(n);
  for (Face f : faces) {
    if (!f.is_subset_of(ground)) throw std::invalid_argument("face " + f.to_string() + " has a label outside [1, " + std::to_string(n) + "]");
    for_each_label(f, [&](int v) {
      if (!std::binary_search(faces.begin(), faces.end(), f.without(v)))
        throw std::invalid_argument("face family is not downward closed: " + f.to_string() + " lacks " + f.without(v).to_string());
    });
  }
  if (!faces.empty() && faces.front() != Face{}) throw std::invalid_argument("nonempty complex lacks the empty face");
  return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  check_ground(n);
  return SimplicialComplex(n, {});
}

bool SimplicialComplex::contains(Face f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

VertexSet SimplicialComplex::vertices() const {
  std::uint64_t m = 0;
  for (Face f : faces_)
    if (f.size() == 1) m |= f.mask();
  return Face::from_mask(m);
}

std::vector<Face> SimplicialComplex::facets() const {
  const VertexSet verts = vertices();
  std::vector<Face> out;
  for (Face f : faces_) {
    bool maximal = true;
    for_each_label(verts - f, [&](int v) {
      if (maximal && contains(f.with(v))) maximal = false;
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

IntVector face_vector(const SimplicialComplex& c) {
  IntVector f(static_cast<std::size_t>(c.ground_size()));
  for (Face face : c.faces())
    if (!face.empty()) ++f.at(static_cast<std::size_t>(face.size()));
  return f;
}

SimplicialComplex link(const SimplicialComplex& c, int v) {
  if (v < 1 || v > c.ground_size() || !c.contains(Face{}.with(v)))
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not a vertex of the complex");
  std::vector<Face> faces;
  for (Face f : c.faces())
    if (f.contains(v)) faces.push_back(f.without(v));
  return SimplicialComplex::from_faces(c.ground_size(), std::move(faces));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexSet w) {
  if (!w.is_subset_of(Face::range(c.ground_size())))
    throw std::invalid_argument("vertex set " + w.to_string() + " outside the ground set");
  std::vector<Face> faces;
  for (Face f : c.faces())
    if (f.is_subset_of(w)) faces.push_back(f);
  return SimplicialComplex::from_faces(c.ground_size(), std::move(faces));
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  if (k < 0) throw std::invalid_argument("skeleton cardinality must be nonnegative");
  std::vector<Face> faces;
  for (Face f : c.faces())
    if (f.size() <= k) faces.push_back(f);
  return SimplicialComplex::from_faces(c.ground_size(), std::move(faces));
}

Graph underlying_graph(const SimplicialComplex& c) {
  Graph g(c.ground_size());
  for (Face f : c.faces())
    if (f.size() == 2) g.add_edge(f.min_label(), f.max_label());
  return g;
}

namespace {

void collect_cliques(const Graph& g, std::uint64_t clique, std::uint64_t candidates, std::vector<Face>& out) {
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    const std::uint64_t grown = clique | (std::uint64_t{1} << v);
    out.push_back(Face::from_mask(grown));
    collect_cliques(g, grown, candidates & g.adjacency_mask(v + 1), out);
  }
}

}  // namespace

SimplicialComplex clique_complex(const Graph& g) {
  std::vector<Face> faces{Face{}};
  collect_cliques(g, 0, g.vertices().mask(), faces);
  if (faces.size() > SimplicialComplex::kMaxFaces) throw std::length_error("clique complex exceeds the face limit");
  return SimplicialComplex::from_faces(g.order(), std::move(faces));
}

SimplicialComplex fill_boundaries(const SimplicialComplex& c, int min_size) {
  if (c.is_void()) return c;
  std::vector<Face> faces = c.faces();
  const VertexSet verts = c.vertices();
  const int lowest = std::max(min_size, 2);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Face> snapshot = faces;
    auto present = [&](Face f) { return std::binary_search(snapshot.begin(), snapshot.end(), f); };
    for (Face f : snapshot) {
      if (f.size() + 1 < lowest) continue;
      // Extend only by labels above max(f) so each candidate is tried once per pass.
      for_each_label(verts, [&](int v) {
        if (v <= f.max_label()) return;
        const Face candidate = f.with(v);
        bool boundary = true;
        for_each_label(candidate, [&](int w) {
          if (boundary && !present(candidate.without(w))) boundary = false;
        });
        if (boundary && !present(candidate)) {
          faces.push_back(candidate);
          changed = true;
        }
      });
    }
    sort_unique(faces);
  }
  return SimplicialComplex::from_faces(c.ground_size(), std::move(faces));
}

}  // namespace turanhull
