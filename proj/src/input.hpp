#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "rep.hpp"
#include "surface.hpp"

namespace cmpgeo {

// A module named in an input: either an expression over vertex names such as
// "I(1)+S(1)" or "M(g0,3)", or explicit dimensions and arrow matrices.
struct ModuleSpec {
  std::string expr;
  std::vector<int> dims;
  std::vector<std::pair<std::string, std::vector<std::vector<long long>>>> matrices;
};

// Either a triangulation or an explicit presentation, with optional modules.
struct Input {
  std::string name;
  std::optional<Triangulation> triangulation;
  std::optional<Presentation> presentation;
  std::vector<ModuleSpec> modules;
  bool complete = false;  // the modules list every indecomposable up to isomorphism
};

}  // namespace cmpgeo
