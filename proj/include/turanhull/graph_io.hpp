#pragma once

#include <string>

#include <json.hpp>

#include "turanhull/graph.hpp"
#include "turanhull/parse_error.hpp"

namespace turanhull {

// Edge-list text: a header line "n=<int>", then one "u v" pair per line.
// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// graph6 (optionally prefixed by ">>graph6<<"), orders 0..64.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// {"n": int, "edges": [[u, v], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Detects the format: JSON if the first non-space character is '{', edge list
/// if the first non-comment line starts with "n=", graph6 otherwise.
Graph parse_graph(const std::string& text);

}  // namespace turanhull
