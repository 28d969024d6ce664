#include "turanhull/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace turanhull {

namespace {

void check_shift_pair(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("shift needs two distinct vertices, got " + std::to_string(u) + " twice");
  if (g.adjacent(u, v)) throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are adjacent");
}

std::uint64_t clique_count(const Graph& g, int k) { return clique_vector(g).entry(static_cast<std::size_t>(k)); }

}  // namespace

Graph zykov_shift(const Graph& g, int u, int v) {
  check_shift_pair(g, u, v);
  Graph out = g;
  for_each_label(g.neighbors(u), [&](int z) { out.remove_edge(u, z); });
  for_each_label(g.neighbors(v), [&](int w) { out.add_edge(u, w); });
  return out;
}

CliqueDelta zykov_clique_delta(const Graph& g, int u, int v, int k) {
  check_shift_pair(g, u, v);
  if (k < 1) throw std::invalid_argument("clique size must be positive");
  const auto lhs = static_cast<std::int64_t>(clique_count(zykov_shift(g, u, v), k));
  const auto around_u = static_cast<std::int64_t>(clique_count(induced_subgraph(g, g.neighbors(u)).graph, k - 1));
  const auto around_v = static_cast<std::int64_t>(clique_count(induced_subgraph(g, g.neighbors(v)).graph, k - 1));
  return {lhs, static_cast<std::int64_t>(clique_count(g, k)) - around_u + around_v};
}

nlohmann::json trace_to_json(const Trace& trace) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& step : trace) j.push_back({{"op", step.op}, {"u", step.u}, {"v", step.v}});
  return j;
}

std::optional<std::vector<VertexSet>> multipartite_parts(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> parts;
  VertexSet seen;
  for (int u = 1; u <= g.order(); ++u) {
    const VertexSet part = (all - g.neighbors(u));
    bool ok = true;
    for_each_label(part, [&](int w) {
      if (ok && (all - g.neighbors(w)) != part) ok = false;
    });
    if (!ok) return std::nullopt;
    if (!part.is_subset_of(seen)) {
      parts.push_back(part);
      seen = seen | part;
    }
  }
  std::stable_sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  return parts;
}

Symmetrization symmetrize_to_multipartite(const Graph& g) {
  Symmetrization out{g, {}, 0};
  Graph& h = out.graph;
  const VertexSet all = h.vertices();
  VertexSet open = all;
  while (true) {
    int pick = 0;
    int pick_degree = -1;
    for_each_label(open, [&](int v) {
      const bool has_open_non_neighbor = !(open - h.neighbors(v) - Face{}.with(v)).empty();
      if (has_open_non_neighbor && h.degree(v) > pick_degree) {
        pick = v;
        pick_degree = h.degree(v);
      }
    });
    if (pick == 0) break;
    const VertexSet non_neighbors = all - h.neighbors(pick) - Face{}.with(pick);
    if (!non_neighbors.is_subset_of(open)) throw std::logic_error("settled vertex lost an edge during symmetrization");
    for_each_label(non_neighbors, [&](int u) {
      if (h.neighbors(u) == h.neighbors(pick)) return;
      h = zykov_shift(h, u, pick);
      out.trace.push_back({"zykov_shift", u, pick});
    });
    open = open - non_neighbors.with(pick);
    ++out.rounds;
  }
  return out;
}

Balancing balance_multipartite(const Graph& g) {
  if (!is_complete_multipartite(g)) throw std::invalid_argument("graph is not complete multipartite");
  Balancing out{g, {}};
  Graph& h = out.graph;
  while (true) {
    const auto parts = *multipartite_parts(h);
    if (parts.empty()) break;
    const VertexSet large = parts.front();
    const VertexSet small = parts.back();
    if (large.size() - small.size() <= 1) break;
    const int mover = large.max_label();
    const std::vector<int> zs = small.labels();
    const std::vector<int> ws = large.labels();
    for (std::size_t i = 0; i < zs.size(); ++i) {
      h.remove_edge(mover, zs[i]);
      h.add_edge(mover, ws[i]);
    }
    out.trace.push_back({"balance_swap", mover, zs.front()});
    h = zykov_shift(h, mover, zs.front());
    out.trace.push_back({"zykov_shift", mover, zs.front()});
  }
  return out;
}

SimplicialComplex complex_shift(const SimplicialComplex& c, int u, int target) {
  if (u == target) throw std::invalid_argument("complex shift needs two distinct vertices");
  const Face su = Face{}.with(u);
  const Face st = Face{}.with(target);
  if (!c.contains(su) || !c.contains(st)) throw std::invalid_argument("shift endpoints must be vertices of the complex");
  if (c.contains(su | st))
    throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(target) + " are adjacent");
  std::vector<Face> faces;
  for (Face f : c.faces())
    if (!(f.contains(u) && f.size() >= 2)) faces.push_back(f);
  const SimplicialComplex around_target = link(c, target);
  for (Face f : around_target.faces()) faces.push_back(f.with(u));
  return SimplicialComplex::from_faces(c.ground_size(), std::move(faces));
}

LambdaConstruction shift_non_neighbors_onto(const SimplicialComplex& c, int target) {
  const Graph graph = underlying_graph(c);
  const VertexSet verts = c.vertices();
  if (!verts.contains(target)) throw std::invalid_argument("target " + std::to_string(target) + " is not a vertex of the complex");
  LambdaConstruction out{c, target, {}, 1, c, c};
  const VertexSet others = verts - graph.neighbors(target) - Face{}.with(target);
  for_each_label(others, [&](int u) {
    out.lambda = complex_shift(out.lambda, u, target);
    out.shifted.push_back(u);
  });
  out.m = 1 + static_cast<int>(out.shifted.size());
  out.link = link(out.lambda, target);
  out.induced = induced_subcomplex(out.lambda, out.link.vertices());
  return out;
}

bool ColoredKSubset::is_colored(Face face, int r) {
  if (r < 1) return false;
  std::uint64_t seen = 0;
  bool ok = true;
  for_each_label(face, [&](int v) {
    const int cls = residue_class(v, r);
    if (cls > 64) return;  // r > 64: every label is its own class
    const std::uint64_t bit = std::uint64_t{1} << (cls - 1);
    if ((seen & bit) != 0) ok = false;
    seen |= bit;
  });
  return ok;
}

ColoredKSubset::ColoredKSubset(Face face, int r) : face_(face), r_(r) {
  if (r < 1) throw std::invalid_argument("color count must be positive");
  if (!is_colored(face, r)) throw std::invalid_argument(face.to_string() + " has two elements in one residue class mod " + std::to_string(r));
}

std::vector<int> ColoredKSubset::residues() const {
  std::vector<int> out;
  for_each_label(face_, [&](int v) { out.push_back(residue_class(v, r_)); });
  return out;
}

bool dominance_order(const ColoredKSubset& t, const ColoredKSubset& s) {
  if (t.size() != s.size()) throw std::invalid_argument("dominance order compares subsets of equal size");
  const auto a = t.face().labels();
  const auto b = s.face().labels();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

// Visits colored T with t_i <= bound[i] in lexicographic order; stops when visit returns false.
template <typename Visit>
bool for_each_dominated(const std::vector<int>& bound, int r, std::size_t pos, int prev, Face partial, Visit& visit) {
  if (pos == bound.size()) return visit(partial);
  for (int t = prev + 1; t <= bound[pos]; ++t) {
    const Face next = partial.with(t);
    if (!ColoredKSubset::is_colored(next, r)) continue;
    if (!for_each_dominated(bound, r, pos + 1, t, next, visit)) return false;
  }
  return true;
}

}  // namespace

ShiftednessResult is_color_shifted(std::span<const Face> family, int k, int r) {
  std::vector<Face> members(family.begin(), family.end());
  for (Face f : members) {
    if (f.size() != k) throw std::invalid_argument(f.to_string() + " is not a " + std::to_string(k) + "-subset");
    ColoredKSubset check(f, r);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Face> lex = members;
  std::sort(lex.begin(), lex.end(), [](Face a, Face b) { return a.labels() < b.labels(); });

  ShiftednessResult result;
  for (Face s : lex) {
    auto visit = [&](Face t) {
      if (std::binary_search(members.begin(), members.end(), t)) return true;
      result = {false, std::make_pair(t, s)};
      return false;
    };
    if (!for_each_dominated(s.labels(), r, 0, 0, Face{}, visit)) return result;
  }
  return result;
}

ShiftednessResult is_color_shifted(const SimplicialComplex& c, int r) {
  for (int k = 1; k <= c.ground_size(); ++k) {
    std::vector<Face> family;
    for (Face f : c.faces()) {
      if (f.size() != k) continue;
      if (!ColoredKSubset::is_colored(f, r)) return {false, std::make_pair(f, f)};
      family.push_back(f);
    }
    if (auto res = is_color_shifted(family, k, r); !res.shifted) return res;
  }
  return {};
}

}  // namespace turanhull
