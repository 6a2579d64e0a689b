#pragma once

#include <string>
#include <vector>

#include "wallacs/document.hpp"

namespace wallacs {

// Built-in example systems: spheres S^{2n} named by total dimension,
// products S^n x S^n named by n, the quaternionic projective plane, and one
// synthetic rank-4 system at n = 4 passing every condition.
std::vector<std::string> catalog_names();

// Throws std::out_of_range for a name not in catalog_names().
ManifoldDocument catalog_entry(const std::string& name);

}  // namespace wallacs
