#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "turanhull/enumerate.hpp"
#include "turanhull/operators.hpp"
#include "turanhull/turan.hpp"
#include "turanhull/verify.hpp"

using namespace turanhull;

namespace {

Graph path3() { return Graph::from_edges(3, {{1, 2}, {2, 3}}); }
Graph cycle5() { return Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

SimplicialComplex closure(int n, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<Face> fs;
  for (const auto& f : facets) fs.push_back(Face::from_labels(f));
  return SimplicialComplex::from_facets(n, fs);
}

std::vector<int> part_sizes(const Graph& g) {
  std::vector<int> sizes;
  const auto parts = multipartite_parts(g);
  for (Face p : *parts) sizes.push_back(p.size());
  return sizes;
}

Graph multipartite(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  Graph g(n);
  int start = 1;
  for (std::size_t a = 0; a < sizes.size(); ++a) {
    int other = start + sizes[a];
    for (std::size_t b = a + 1; b < sizes.size(); ++b) {
      for (int u = start; u < start + sizes[a]; ++u)
        for (int v = other; v < other + sizes[b]; ++v) g.add_edge(u, v);
      other += sizes[b];
    }
    start += sizes[a];
  }
  return g;
}

// c_{k-1} of the graph induced on a vertex set, with c_0 = 1.
std::uint64_t induced_count(const Graph& g, VertexSet w, int k) {
  return oracle::clique_vector(induced_subgraph(g, w).graph).entry(static_cast<std::size_t>(k));
}

// Brute-force color-shiftedness: every colored k-set below a member is a member.
bool brute_color_shifted(const std::set<Face>& family, int k, int r, int max_label) {
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << max_label); ++m) {
    const Face t = Face::from_mask(m);
    if (t.size() != k || !ColoredKSubset::is_colored(t, r) || family.count(t) != 0) continue;
    for (Face s : family)
      if (dominance_order(ColoredKSubset(t, r), ColoredKSubset(s, r))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("zykov shift examples") {
  CHECK(zykov_shift(path3(), 1, 3) == path3());
  CHECK(zykov_shift(Graph(4), 2, 4) == Graph(4));
  const Graph shifted = zykov_shift(cycle5(), 1, 3);
  CHECK(shifted == Graph::from_edges(5, {{1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 5}}));
  CHECK(oracle::clique_vector(shifted).at(2) == 5);
  CHECK_THROWS_AS(zykov_shift(path3(), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(zykov_shift(path3(), 1, 1), std::invalid_argument);
  CHECK_THROWS(zykov_shift(path3(), 1, 4));
}

TEST_CASE("zykov clique delta examples") {
  const CliqueDelta p = zykov_clique_delta(path3(), 1, 3, 2);
  CHECK(p.lhs == 2);
  CHECK(p.rhs == 2);
  const Graph k22 = turan_graph(4, 2);
  for (int k = 1; k <= 4; ++k) {
    const CliqueDelta same = zykov_clique_delta(k22, 1, 2, k);
    CHECK(same.lhs == same.rhs);
    CHECK(same.lhs == static_cast<std::int64_t>(clique_vector(k22).at(static_cast<std::size_t>(k))));
  }
  const Graph c5 = cycle5();
  for (int k = 1; k <= 5; ++k) {
    const CliqueDelta d = zykov_clique_delta(c5, 1, 3, k);
    const auto kk = static_cast<std::size_t>(k);
    const auto brute = static_cast<std::int64_t>(oracle::clique_vector(zykov_shift(c5, 1, 3)).at(kk));
    const auto formula = static_cast<std::int64_t>(oracle::clique_vector(c5).at(kk)) -
                         static_cast<std::int64_t>(induced_count(c5, c5.neighbors(1), k - 1)) +
                         static_cast<std::int64_t>(induced_count(c5, c5.neighbors(3), k - 1));
    CHECK(d.lhs == brute);
    CHECK(d.rhs == formula);
  }
}

TEST_CASE("zykov shift identity and clique number on every graph with n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    std::uint64_t bad = 0;
    enumerate_labeled_graphs(n, [&](std::uint64_t, const Graph& g) {
      const int w = clique_number(g);
      const IntVector c = clique_vector(g);
      for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
          if (u == v || g.adjacent(u, v)) continue;
          const Graph s = zykov_shift(g, u, v);
          if (clique_number(s) > w) ++bad;
          const IntVector cs = clique_vector(s);
          const IntVector nu = clique_vector(induced_subgraph(g, g.neighbors(u)).graph);
          const IntVector nv = clique_vector(induced_subgraph(g, g.neighbors(v)).graph);
          for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k)
            if (cs.at(k) + nu.entry(k - 1) != c.at(k) + nv.entry(k - 1)) ++bad;
          if (n <= 4)
            for (int k = 1; k <= n; ++k) {
              const CliqueDelta d = zykov_clique_delta(g, u, v, k);
              if (d.lhs != d.rhs) ++bad;
            }
        }
    });
    CHECK(bad == 0);
  }
}

TEST_CASE("shifting one way or the other never lowers both ratios") {
  // q = c_k / c_{k-1} of G is the mediant of the ratios of G_{u->v} and G_{v->u}.
  std::uint64_t cases = 0;
  std::uint64_t bad = 0;
  for (int n = 2; n <= 6; ++n)
    enumerate_labeled_graphs(n, [&](std::uint64_t, const Graph& g) {
      const IntVector c = clique_vector(g);
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
          if (g.adjacent(u, v)) continue;
          const IntVector a = clique_vector(zykov_shift(g, u, v));
          const IntVector b = clique_vector(zykov_shift(g, v, u));
          for (std::size_t k = 2; k <= static_cast<std::size_t>(n); ++k) {
            if (c.at(k - 1) == 0 || a.at(k - 1) == 0 || b.at(k - 1) == 0) continue;
            ++cases;
            // Compare x/y against c_k/c_{k-1} by cross multiplication.
            auto cmp = [&](const IntVector& x) {
              const auto lhs = static_cast<__int128>(x.at(k)) * c.at(k - 1);
              const auto rhs = static_cast<__int128>(c.at(k)) * x.at(k - 1);
              return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
            };
            const int ca = cmp(a);
            const int cb = cmp(b);
            if (!(ca > 0 || cb > 0 || (ca == 0 && cb == 0))) ++bad;
          }
        }
    });
  CHECK(cases > 0);
  CHECK(bad == 0);
}

TEST_CASE("multipartite detection") {
  CHECK(is_complete_multipartite(turan_graph(7, 3)));
  CHECK(is_complete_multipartite(Graph(4)));
  CHECK(is_complete_multipartite(Graph::complete(4)));
  CHECK_FALSE(is_complete_multipartite(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}})));
  CHECK(is_complete_multipartite(path3()));
  CHECK_FALSE(is_complete_multipartite(cycle5()));
  CHECK(part_sizes(multipartite({1, 3, 2})) == std::vector<int>{3, 2, 1});
  for (int n = 1; n <= 5; ++n)
    enumerate_labeled_graphs(n, [&](std::uint64_t, const Graph& g) {
      CHECK(is_complete_multipartite(g) == oracle::complete_multipartite(g));
    });
}

TEST_CASE("symmetrization examples") {
  const Graph t = turan_graph(6, 3);
  const Symmetrization fixed = symmetrize_to_multipartite(t);
  CHECK(fixed.graph == t);
  CHECK(fixed.trace.empty());
  const Symmetrization p = symmetrize_to_multipartite(path3());
  CHECK(p.graph.order() == 3);
  CHECK(oracle::complete_multipartite(p.graph));
  CHECK(clique_number(p.graph) <= 2);
  const Symmetrization c = symmetrize_to_multipartite(cycle5());
  CHECK(c.graph.order() == 5);
  CHECK(oracle::complete_multipartite(c.graph));
  CHECK(clique_number(c.graph) <= 2);
  CHECK(c.rounds <= symmetrization_round_bound(5));
}

TEST_CASE("symmetrization over every graph with n <= 6, with trace replay") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t bad = 0;
    enumerate_labeled_graphs(n, [&](std::uint64_t, const Graph& g) {
      const Symmetrization s = symmetrize_to_multipartite(g);
      if (s.rounds > symmetrization_round_bound(n)) ++bad;
      if (!oracle::complete_multipartite(s.graph)) ++bad;
      if (clique_number(s.graph) > clique_number(g)) ++bad;
      Graph replay = g;
      for (const TraceStep& step : s.trace) {
        if (step.op != "zykov_shift") ++bad;
        const Graph next = zykov_shift(replay, step.u, step.v);
        if (next == replay) ++bad;
        replay = next;
      }
      if (replay != s.graph) ++bad;
    });
    CHECK(bad == 0);
  }
}

TEST_CASE("balancing examples") {
  const Balancing b41 = balance_multipartite(multipartite({4, 1}));
  CHECK(part_sizes(b41.graph) == std::vector<int>{3, 2});
  CHECK(clique_vector(b41.graph).trimmed() == IntVector{5, 6});
  const Graph k222 = multipartite({2, 2, 2});
  const Balancing same = balance_multipartite(k222);
  CHECK(same.graph == k222);
  CHECK(same.trace.empty());
  const Graph k31 = multipartite({3, 1});
  CHECK(clique_vector(k31).at(2) == 3);
  const Balancing b31 = balance_multipartite(k31);
  CHECK(part_sizes(b31.graph) == std::vector<int>{2, 2});
  CHECK(clique_vector(b31.graph).at(2) == 4);
  CHECK_THROWS_AS(balance_multipartite(cycle5()), std::invalid_argument);
  CHECK(balance_multipartite(Graph(0)).graph.order() == 0);
}

TEST_CASE("balancing reaches the turan clique vector") {
  for (int n = 1; n <= 9; ++n) {
    // Every composition of n into parts, as a multipartite graph.
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
      std::vector<int> sizes{1};
      for (int i = 0; i < n - 1; ++i) {
        if ((cuts >> i) & 1U)
          sizes.push_back(1);
        else
          ++sizes.back();
      }
      const Balancing b = balance_multipartite(multipartite(sizes));
      const std::vector<int> got = part_sizes(b.graph);
      CHECK(got.front() - got.back() <= 1);
      CHECK(clique_vector(b.graph) == turan_clique_vector(n, static_cast<int>(sizes.size())));
      for (const TraceStep& step : b.trace) CHECK((step.op == "zykov_shift" || step.op == "balance_swap"));
    }
  }
}

TEST_CASE("trace JSON") {
  const Trace t{{"zykov_shift", 2, 1}, {"balance_swap", 3, 4}};
  CHECK(trace_to_json(t) ==
        nlohmann::json::parse(R"([{"op":"zykov_shift","u":2,"v":1},{"op":"balance_swap","u":3,"v":4}])"));
}

TEST_CASE("complex shift examples") {
  const SimplicialComplex two_edges = closure(4, {{1, 2}, {3, 4}});
  const SimplicialComplex moved = complex_shift(two_edges, 3, 1);
  CHECK(moved == closure(4, {{1, 2}, {2, 3}, {4}}));
  CHECK(face_vector(moved).trimmed() == IntVector{4, 2});
  const SimplicialComplex points = closure(2, {{1}, {2}});
  CHECK(complex_shift(points, 2, 1) == points);
  const SimplicialComplex edge_point = closure(3, {{1, 2}, {3}});
  CHECK(complex_shift(edge_point, 3, 2) == closure(3, {{1, 2}, {1, 3}}));
  CHECK(face_vector(complex_shift(edge_point, 3, 2)).trimmed() == IntVector{3, 2});
  CHECK_THROWS_AS(complex_shift(two_edges, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(complex_shift(two_edges, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(complex_shift(closure(3, {{1}}), 2, 1), std::invalid_argument);
}

TEST_CASE("complex shift identity over every complex with n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    std::uint64_t bad = 0;
    std::uint64_t pairs = 0;
    enumerate_complexes(n, false, [&](std::uint64_t, const SimplicialComplex& c) {
      if (c.is_void()) return;
      const Graph g = underlying_graph(c);
      const VertexSet vs = c.vertices();
      const int chromatic_bound = n;
      int chi = 0;
      for (int r = 1; r <= chromatic_bound; ++r)
        if (oracle::colorable(g, r)) {
          chi = r;
          break;
        }
      for_each_label(vs, [&](int u) {
        for_each_label(vs, [&](int t) {
          if (u == t || g.adjacent(u, t)) return;
          ++pairs;
          const SimplicialComplex out = complex_shift(c, u, t);
          if (!oracle::downward_closed(out)) ++bad;
          const IntVector fo = oracle::face_vector(out);
          const IntVector fi = oracle::face_vector(c);
          const SimplicialComplex lu = link(c, u);
          const SimplicialComplex lt = link(c, t);
          for (int j = 1; j <= n; ++j)
            if (fo.at(static_cast<std::size_t>(j)) + oracle::faces_of_size(lu, j - 1) !=
                fi.at(static_cast<std::size_t>(j)) + oracle::faces_of_size(lt, j - 1))
              ++bad;
          if (!oracle::colorable(underlying_graph(out), chi)) ++bad;
        });
      });
    });
    CHECK(pairs > 0);
    CHECK(bad == 0);
  }
}

TEST_CASE("lambda decomposition") {
  auto check = [](const SimplicialComplex& c, int target) {
    const LambdaConstruction lc = shift_non_neighbors_onto(c, target);
    CHECK(lc.m == 1 + static_cast<int>(lc.shifted.size()));
    CHECK(lc.link == link(lc.lambda, target));
    CHECK(lc.induced == induced_subcomplex(lc.lambda, lc.link.vertices()));
    const IntVector fl = oracle::face_vector(lc.lambda);
    for (int j = 1; j <= c.ground_size(); ++j)
      CHECK(fl.at(static_cast<std::size_t>(j)) ==
            static_cast<std::uint64_t>(lc.m) * oracle::faces_of_size(lc.link, j - 1) +
                oracle::faces_of_size(lc.induced, j));
    const Graph g = underlying_graph(lc.lambda);
    for (int u : lc.shifted) CHECK(g.neighbors(u) == g.neighbors(target));
  };
  for (int n = 1; n <= 4; ++n)
    enumerate_complexes(n, false, [&](std::uint64_t, const SimplicialComplex& c) {
      for_each_label(c.vertices(), [&](int t) { check(c, t); });
    });
  for (int n : {5, 6})
    for (std::uint64_t sample = 0; sample < 200; ++sample) {
      const SimplicialComplex c = random_colorable_complex(n, 3, 77, sample);
      if (!c.vertices().empty()) check(c, c.vertices().min_label());
    }
}

TEST_CASE("residues and colored subsets") {
  CHECK(residue_class(1, 3) == 1);
  CHECK(residue_class(3, 3) == 3);
  CHECK(residue_class(4, 3) == 1);
  CHECK(ColoredKSubset::is_colored(Face::from_labels({1, 2}), 2));
  CHECK_FALSE(ColoredKSubset::is_colored(Face::from_labels({1, 3}), 2));
  CHECK_THROWS_AS(ColoredKSubset(Face::from_labels({2, 4}), 2), std::invalid_argument);
  CHECK(ColoredKSubset(Face::from_labels({2, 3, 7}), 3).residues() == std::vector<int>{2, 3, 1});
}

TEST_CASE("dominance order") {
  auto s = [](std::initializer_list<int> l) { return ColoredKSubset(Face::from_labels(l), 2); };
  CHECK(dominance_order(s({1, 2}), s({3, 4})));
  CHECK_FALSE(dominance_order(s({1, 4}), s({2, 3})));
  CHECK(dominance_order(s({1, 4}), s({1, 4})));
  CHECK_THROWS_AS(dominance_order(s({1}), s({1, 2})), std::invalid_argument);
}

TEST_CASE("color shiftedness") {
  auto fam = [](std::initializer_list<std::initializer_list<int>> l) {
    std::vector<Face> out;
    for (const auto& f : l) out.push_back(Face::from_labels(f));
    return out;
  };
  CHECK(is_color_shifted(fam({{1, 2}}), 2, 2).shifted);
  const ShiftednessResult no = is_color_shifted(fam({{3, 4}}), 2, 2);
  CHECK_FALSE(no.shifted);
  REQUIRE(no.witness.has_value());
  CHECK(no.witness->first == Face::from_labels({1, 2}));
  CHECK(no.witness->second == Face::from_labels({3, 4}));
  const auto square = fam({{1, 2}, {1, 4}, {3, 4}, {2, 3}});
  const std::set<Face> square_set(square.begin(), square.end());
  CHECK(is_color_shifted(square, 2, 2).shifted == brute_color_shifted(square_set, 2, 2, 4));
  CHECK(is_color_shifted(square, 2, 2).shifted);
  CHECK_THROWS_AS(is_color_shifted(fam({{1, 3}}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_color_shifted(fam({{1, 2, 3}}), 2, 3), std::invalid_argument);
}

TEST_CASE("color shiftedness agrees with brute force on small families") {
  // All families of colored 2-subsets of {1..6} with r = 3.
  std::vector<Face> universe;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      if (residue_class(a, 3) != residue_class(b, 3)) universe.push_back(Face::from_labels({a, b}));
  REQUIRE(universe.size() == 12);
  std::uint64_t disagreements = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << universe.size()); ++m) {
    std::vector<Face> family;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if ((m >> i) & 1U) family.push_back(universe[i]);
    const std::set<Face> as_set(family.begin(), family.end());
    const ShiftednessResult res = is_color_shifted(family, 2, 3);
    if (res.shifted != brute_color_shifted(as_set, 2, 3, 6)) ++disagreements;
    if (!res.shifted) {
      const auto& [t, s] = *res.witness;
      if (as_set.count(t) != 0 || as_set.count(s) == 0) ++disagreements;
      if (!dominance_order(ColoredKSubset(t, 3), ColoredKSubset(s, 3))) ++disagreements;
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("color shiftedness of complexes") {
  CHECK(is_color_shifted(clique_complex(turan_graph(4, 2)), 2).shifted == false);
  const SimplicialComplex good = closure(4, {{1, 2}, {1, 4}, {3}});
  const ShiftednessResult g = is_color_shifted(good, 2);
  CHECK(g.shifted);
  const SimplicialComplex bad = closure(3, {{1, 3}, {2}});
  const ShiftednessResult b = is_color_shifted(bad, 2);
  CHECK_FALSE(b.shifted);
  REQUIRE(b.witness.has_value());
  CHECK(b.witness->first == b.witness->second);
  CHECK(b.witness->first == Face::from_labels({1, 3}));
  const ShiftednessResult gap = is_color_shifted(closure(3, {{1, 3}}), 2);
  REQUIRE(gap.witness.has_value());
  CHECK(gap.witness->first == Face::from_labels({2}));
  CHECK(gap.witness->second == Face::from_labels({3}));
}
