#include "turanhull/graph_io.hpp"

#include "turanhull/text_util.hpp"

namespace turanhull {

using detail::content_lines;
using detail::to_integer;
using detail::tokens;

Graph parse_edge_list(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing \"n=<int>\" header", 1, 0);
  const auto n = detail::header_order(lines.front().text);
  if (!n) throw ParseError("expected \"n=<int>\" header", lines.front().number, 0);
  if (*n < 0 || *n > kMaxLabel) throw ParseError("order " + std::to_string(*n) + " outside [0, 64]", lines.front().number, 0);
  Graph g(static_cast<int>(*n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i].text);
    if (toks.size() != 2) throw ParseError("expected \"u v\"", lines[i].number, 0);
    const auto u = to_integer(toks[0]);
    const auto v = to_integer(toks[1]);
    if (!u || !v) throw ParseError("non-integer vertex", lines[i].number, 0);
    if (*u < 1 || *u > *n || *v < 1 || *v > *n) throw ParseError("vertex outside [1, n]", lines[i].number, 0);
    if (*u == *v) throw ParseError("loop at vertex " + std::to_string(*u), lines[i].number, 0);
    if (g.adjacent(static_cast<int>(*u), static_cast<int>(*v)))
      throw ParseError("duplicate edge " + std::to_string(*u) + " " + std::to_string(*v), lines[i].number, 0);
    g.add_edge(static_cast<int>(*u), static_cast<int>(*v));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(const std::string& raw) {
  std::string_view text(raw);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  std::size_t base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", 0, base + i);
  }
  if (text.empty()) throw ParseError("empty graph6 string", 0, base);

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("unsupported graph6 order encoding", 0, base);
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
    pos = 4;
  }
  if (n > kMaxLabel) throw ParseError("order " + std::to_string(n) + " exceeds 64", 0, base);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("expected " + std::to_string(bytes) + " adjacency bytes, found " + std::to_string(text.size() - pos), 0,
                     base + pos);

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i + 1, j + 1);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = text[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("nonzero padding bit", 0, base + pos + k / 6);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph JSON needs an integer \"n\"", 0, 0);
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > kMaxLabel) throw ParseError("order " + std::to_string(n) + " outside [0, 64]", 0, 0);
  Graph g(static_cast<int>(n));
  if (!j.contains("edges")) return g;
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0, 0);
  std::size_t index = 0;
  for (const auto& e : j["edges"]) {
    const std::string where = "edge #" + std::to_string(index++);
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError(where + " is not an integer pair", 0, 0);
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(where + " has a vertex outside [1, n]", 0, 0);
    if (u == v) throw ParseError(where + " is a loop", 0, 0);
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) throw ParseError(where + " duplicates an earlier edge", 0, 0);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph parse_graph(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty graph input", 1, 0);
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), 0, e.byte);
    }
    return graph_from_json(j);
  }
  const auto lines = content_lines(text);
  if (!lines.empty() && detail::header_order(lines.front().text)) return parse_edge_list(text);
  return parse_graph6(text);
}

}  // namespace turanhull
