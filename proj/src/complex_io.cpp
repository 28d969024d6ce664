#include "turanhull/complex_io.hpp"

#include "turanhull/text_util.hpp"

namespace turanhull {

namespace {

Face facet_from_labels(const std::vector<long long>& labels, long long n, const std::string& where, std::size_t line) {
  std::vector<int> vs;
  for (long long v : labels) {
    if (v < 1 || v > n) throw ParseError(where + ": label " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]", line, 0);
    vs.push_back(static_cast<int>(v));
  }
  try {
    return Face::from_labels(vs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what(), line, 0);
  }
}

}  // namespace

SimplicialComplex parse_complex_text(const std::string& text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("missing \"n=<int>\" header", 1, 0);
  const auto n = detail::header_order(lines.front().text);
  if (!n) throw ParseError("expected \"n=<int>\" header", lines.front().number, 0);
  if (*n < 0 || *n > kMaxLabel) throw ParseError("ground set size outside [0, 64]", lines.front().number, 0);
  if (lines.size() == 2 && lines[1].text == "void") return SimplicialComplex::void_complex(static_cast<int>(*n));
  std::vector<Face> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].text == "{}") {
      facets.push_back(Face{});
      continue;
    }
    std::vector<long long> labels;
    for (auto tok : detail::tokens(lines[i].text)) {
      const auto v = detail::to_integer(tok);
      if (!v) throw ParseError("non-integer label \"" + std::string(tok) + "\"", lines[i].number, 0);
      labels.push_back(*v);
    }
    facets.push_back(facet_from_labels(labels, *n, "facet", lines[i].number));
  }
  return SimplicialComplex::from_facets(static_cast<int>(*n), facets);
}

std::string to_complex_text(const SimplicialComplex& c) {
  std::string out = "n=" + std::to_string(c.ground_size()) + "\n";
  if (c.is_void()) return out + "void\n";
  for (Face f : c.facets()) {
    if (f.empty()) {
      out += "{}\n";
      continue;
    }
    bool first = true;
    for_each_label(f, [&](int v) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    });
    out += '\n';
  }
  return out;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("complex JSON needs an integer \"n\"", 0, 0);
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > kMaxLabel) throw ParseError("ground set size outside [0, 64]", 0, 0);
  if (j.value("void", false)) return SimplicialComplex::void_complex(static_cast<int>(n));
  std::vector<Face> facets;
  if (j.contains("facets")) {
    if (!j["facets"].is_array()) throw ParseError("\"facets\" must be an array", 0, 0);
    std::size_t index = 0;
    for (const auto& f : j["facets"]) {
      const std::string where = "facet #" + std::to_string(index++);
      if (!f.is_array()) throw ParseError(where + " is not an array", 0, 0);
      std::vector<long long> labels;
      for (const auto& v : f) {
        if (!v.is_number_integer()) throw ParseError(where + " has a non-integer label", 0, 0);
        labels.push_back(v.get<long long>());
      }
      facets.push_back(facet_from_labels(labels, n, where, 0));
    }
  }
  return SimplicialComplex::from_facets(static_cast<int>(n), facets);
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
  nlohmann::json facets = nlohmann::json::array();
  if (!c.is_void())
    for (Face f : c.facets()) facets.push_back(f.labels());
  nlohmann::json j = {{"n", c.ground_size()}, {"facets", facets}};
  if (c.is_void()) j["void"] = true;
  return j;
}

SimplicialComplex parse_complex(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{' && text.compare(first, 2, "{}") != 0) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), 0, e.byte);
    }
    return complex_from_json(j);
  }
  return parse_complex_text(text);
}

}  // namespace turanhull
