#pragma once

#include <string>

#include "fishcat/bijections.hpp"
#include "fishcat/matching.hpp"
#include "fishcat/poset.hpp"

namespace fishcat {

// Arc diagram over the numbered points.
std::string render_matching(const Matching& m);

// Height profile of the path.
std::string render_dyck(const DyckPath& path);

// Elements stacked by level; edges are omitted, relations listed below.
std::string render_poset(const Poset& p);

}  // namespace fishcat
