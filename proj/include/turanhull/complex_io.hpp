#pragma once

#include <string>

#include <json.hpp>

#include "turanhull/complex.hpp"
#include "turanhull/parse_error.hpp"

namespace turanhull {

// Text form: header "n=<int>", then one facet per line as space-separated
// labels. A line "{}" names the empty facet; a line "void" (alone) names the
// void complex. Blank lines and '#' comments are ignored. With no facet lines
// the complex is {empty face}.
SimplicialComplex parse_complex_text(const std::string& text);
std::string to_complex_text(const SimplicialComplex& c);

// JSON form: {"n": int, "facets": [[int, ...], ...]}; the void complex carries "void": true.
SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const SimplicialComplex& c);

/// JSON if the first non-space character is '{', text otherwise.
SimplicialComplex parse_complex(const std::string& text);

}  // namespace turanhull
