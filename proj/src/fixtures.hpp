#pragma once

#include <optional>
#include <string>
#include <vector>

#include "input.hpp"

namespace cmpgeo {

const std::vector<std::string>& fixture_names();
std::string fixture_description(const std::string& name);
// Throws ParseError for an unknown name.
Input fixture(const std::string& name, u32 p = 32003);

}  // namespace cmpgeo
