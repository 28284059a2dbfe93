#pragma once

#include <string>
#include <vector>

#include "input.hpp"
#include "json.hpp"

namespace cmpgeo {

using json = nlohmann::ordered_json;

// Accepts a triangulation or a presentation document. Errors are ParseError
// with a line:column or field path prefix.
Input parse_input(const std::string& text, u32 default_p = 32003);

Triangulation triangulation_from_json(const json& j, const std::string& where = "");
Presentation presentation_from_json(const json& j, u32 default_p = 32003, const std::string& where = "");
json to_json(const Triangulation& T);
json to_json(const Presentation& P);

Arc parse_arc_name(const Surface& S, const std::string& name);

// Builds the module named by a spec over A. For triangulations, T and D may be
// given so that "M(arc)" resolves through the arc model.
Rep build_module(const Algebra& A, const ModuleSpec& spec, const TriangulationData* D = nullptr);
json rep_to_json(const Rep& M);

}  // namespace cmpgeo
