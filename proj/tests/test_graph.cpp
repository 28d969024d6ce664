#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "turanhull/enumerate.hpp"
#include "turanhull/graph.hpp"
#include "turanhull/graph_io.hpp"
#include "turanhull/parse_error.hpp"
#include "turanhull/turan.hpp"

using namespace turanhull;

namespace {

Graph path3() { return Graph::from_edges(3, {{1, 2}, {2, 3}}); }
Graph cycle5() { return Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(3, 1);
  CHECK(g.adjacent(1, 3));
  CHECK(g.adjacent(3, 1));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS(g.add_edge(2, 2));
  CHECK_THROWS(g.add_edge(1, 5));
  CHECK_THROWS_AS(g.neighbors(0), std::out_of_range);
  CHECK_THROWS_AS(g.neighbors(5), std::out_of_range);
  g.remove_edge(1, 3);
  CHECK(g.edge_count() == 0);
  CHECK(Graph::complete(4).edges().size() == 6);
  CHECK(Graph::from_edges(3, {{2, 3}, {1, 2}}).edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK_THROWS(Graph(65));
}

TEST_CASE("clique vector examples") {
  CHECK(clique_vector(Graph::complete(4)) == IntVector{4, 6, 4, 1});
  CHECK(clique_vector(Graph(5)) == IntVector{5, 0, 0, 0, 0});
  const Graph k32 = Graph::from_edges(5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  CHECK(clique_vector(k32) == oracle::clique_vector(k32));
  CHECK(clique_vector(k32) == IntVector{5, 6, 0, 0, 0});
  CHECK(clique_vector(Graph(0)).size() == 0);
}

TEST_CASE("clique kernel equals the subset scan on every graph with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t mismatches = 0;
    std::uint64_t seen = 0;
    enumerate_labeled_graphs(n, [&](std::uint64_t, const Graph& g) {
      ++seen;
      const IntVector c = clique_vector(g);
      if (c != oracle::clique_vector(g)) ++mismatches;
      if (c.at(1) != static_cast<std::uint64_t>(n)) ++mismatches;
      if (n >= 2 && c.at(2) != g.edge_count()) ++mismatches;
    });
    CHECK(seen == labeled_graph_count(n));
    CHECK(mismatches == 0);
  }
}

TEST_CASE("clique kernel on dense graphs of larger order") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 14, 0.7);
    CHECK(clique_vector(g) == oracle::clique_vector(g));
  }
  const IntVector k64 = clique_vector(Graph::complete(64));
  CHECK(k64.at(32) == 1832624140942590534ULL);
  CHECK(k64.at(64) == 1);
  CHECK(clique_vector(turan_graph(40, 20)) == turan_clique_vector(40, 20));
}

TEST_CASE("clique number") {
  CHECK(clique_number(Graph::complete(4)) == 4);
  CHECK(clique_number(turan_graph(6, 3)) == oracle::clique_number(turan_graph(6, 3)));
  CHECK(clique_number(turan_graph(6, 3)) == 3);
  CHECK(clique_number(cycle5()) == oracle::clique_number(cycle5()));
  CHECK(clique_number(cycle5()) == 2);
  CHECK(clique_number(Graph(3)) == 1);
  CHECK(clique_number(Graph(0)) == 0);
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(path3(), 2) == Face::from_labels({1, 3}));
  CHECK(neighborhood(path3(), 1) == Face::from_labels({2}));
  CHECK(neighborhood(Graph::complete(4), 3) == Face::from_labels({1, 2, 4}));
}

TEST_CASE("induced subgraph") {
  const auto k2 = induced_subgraph(Graph::complete(4), Face::from_labels({1, 2}));
  CHECK(k2.graph == Graph::complete(2));
  CHECK(k2.labels == std::vector<int>{1, 2});
  CHECK(induced_subgraph(cycle5(), Face::from_labels({3, 4})).graph == Graph::complete(2));
  const auto apart = induced_subgraph(cycle5(), Face::from_labels({2, 5}));
  CHECK(apart.graph == Graph(2));
  CHECK(apart.labels == std::vector<int>{2, 5});
  CHECK(induced_subgraph(cycle5(), Face()).graph.order() == 0);
}

TEST_CASE("colorability examples") {
  CHECK_FALSE(is_r_colorable(Graph::complete(3), 2).has_value());
  const auto k3 = is_r_colorable(Graph::complete(3), 3);
  REQUIRE(k3.has_value());
  CHECK(is_proper_coloring(Graph::complete(3), *k3, 3));
  CHECK_FALSE(is_r_colorable(cycle5(), 2).has_value());
  CHECK_FALSE(oracle::colorable(cycle5(), 2));
  CHECK(is_r_colorable(cycle5(), 3).has_value());
  CHECK(is_r_colorable(Graph(0), 1).has_value());
  CHECK_THROWS_AS(is_r_colorable(Graph(1), 0), std::invalid_argument);
  CHECK_FALSE(is_proper_coloring(Graph::complete(2), {1, 1}, 2));
  CHECK_FALSE(is_proper_coloring(Graph::complete(2), {1, 3}, 2));
}

TEST_CASE("colorability agrees with exhaustive assignment on every graph with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t bad = 0;
    enumerate_labeled_graphs(n, [&](std::uint64_t, const Graph& g) {
      for (int r = 1; r <= std::min(n, 3); ++r) {
        const auto col = is_r_colorable(g, r);
        if (col.has_value() != oracle::colorable(g, r)) ++bad;
        if (col && !is_proper_coloring(g, *col, r)) ++bad;
      }
    });
    CHECK(bad == 0);
  }
}

TEST_CASE("colorability agrees with exhaustive assignment on random graphs with n = 7") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng, 7, 0.25 + 0.5 * (trial % 3) / 2.0);
    for (int r = 2; r <= 4; ++r) {
      const auto col = is_r_colorable(g, r);
      CHECK(col.has_value() == oracle::colorable(g, r));
      if (col) CHECK(is_proper_coloring(g, *col, r));
    }
  }
}

TEST_CASE("colorability on larger structured graphs") {
  CHECK(is_r_colorable(turan_graph(40, 5), 5).has_value());
  CHECK_FALSE(is_r_colorable(turan_graph(40, 5), 4).has_value());
  CHECK_FALSE(is_r_colorable(Graph::complete(12), 11).has_value());
}

TEST_CASE("join with an independent set") {
  CHECK(clique_vector(join_with_independent_set(Graph::complete(2), 2)) == IntVector{4, 5, 2, 0});
  CHECK(oracle::clique_vector(join_with_independent_set(Graph::complete(2), 2)) == IntVector{4, 5, 2, 0});
  CHECK(clique_vector(join_with_independent_set(Graph(1), 1)) == IntVector{2, 1});
  const Graph j = join_with_independent_set(turan_graph(4, 2), 2);
  CHECK(oracle::clique_vector(j).trimmed() == IntVector{6, 12, 8});
  CHECK(clique_vector(j).trimmed() == IntVector{6, 12, 8});
  CHECK(j.adjacent(1, 5));
  CHECK_FALSE(j.adjacent(5, 6));
}

TEST_CASE("join identity on random graphs up to order 8") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = 1 + static_cast<int>(rng() % 4);
    const Graph h = random_graph(rng, n, 0.5);
    const IntVector ch = clique_vector(h);
    const IntVector cj = oracle::clique_vector(join_with_independent_set(h, m));
    for (std::size_t t = 1; t <= cj.size(); ++t)
      CHECK(cj.at(t) == static_cast<std::uint64_t>(m) * ch.entry(t - 1) + ch.entry(t));
  }
}

TEST_CASE("edge list format") {
  const Graph g = parse_edge_list("# a path\nn=3\n1 2\n\n2 3\n");
  CHECK(g == path3());
  CHECK(to_edge_list(g) == "n=3\n1 2\n2 3\n");
  CHECK(parse_edge_list(to_edge_list(cycle5())) == cycle5());
  CHECK(parse_edge_list("n=3\n") == Graph(3));
}

TEST_CASE("edge list errors name the line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("1 2\n") == 1);
  CHECK(line_of("n=3\n1 2\n1 4\n") == 3);
  CHECK(line_of("n=3\n1 1\n") == 2);
  CHECK(line_of("n=3\n1 2 3\n") == 2);
  CHECK(line_of("n=3\n1 x\n") == 2);
  CHECK(line_of("n=3\n\n# c\n2\n") == 4);
}

TEST_CASE("graph6 reference strings") {
  CHECK(to_graph6(cycle5()) == "Dhc");
  CHECK(parse_graph6("Dhc") == cycle5());
  CHECK(to_graph6(Graph::complete(4)) == "C~");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  const Graph k32 = Graph::from_edges(5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  CHECK(to_graph6(k32) == "DFw");
  CHECK(parse_graph6(">>graph6<<DFw\n") == k32);
  Graph path63(63);
  for (int v = 1; v < 63; ++v) path63.add_edge(v, v + 1);
  const std::string s = to_graph6(path63);
  CHECK(s.size() == 330);
  CHECK(s.substr(0, 8) == "~??~hCGG");
  Graph sparse64(64);
  sparse64.add_edge(1, 64);
  sparse64.add_edge(11, 21);
  CHECK(to_graph6(sparse64).substr(0, 4) == "~?@?");
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(6);
  for (int n : {0, 1, 2, 5, 7, 8, 13, 62, 63, 64}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Graph g = random_graph(rng, n, 0.4);
      CHECK(parse_graph6(to_graph6(g)) == g);
    }
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Dhcc"), ParseError);
  CHECK_THROWS_AS(parse_graph6("D h"), ParseError);
  // "Dhd" sets a padding bit.
  CHECK_THROWS_AS(parse_graph6("Dhd"), ParseError);
  CHECK_THROWS_AS(parse_graph6("~??A"), ParseError);
}

TEST_CASE("graph JSON and format detection") {
  const nlohmann::json j = graph_to_json(path3());
  CHECK(j == nlohmann::json::parse(R"({"n":3,"edges":[[1,2],[2,3]]})"));
  CHECK(graph_from_json(j) == path3());
  CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"n":3,"edges":[[1,4]]})")));
  CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"edges":[]})")));
  CHECK(parse_graph(R"({"n":3,"edges":[[1,2],[2,3]]})") == path3());
  CHECK(parse_graph("n=3\n1 2\n2 3\n") == path3());
  CHECK(parse_graph("Dhc\n") == cycle5());
  CHECK_THROWS_AS(parse_graph("{not json"), ParseError);
}
