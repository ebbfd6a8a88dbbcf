#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace causalorder {

using Id = std::string;
using VertexSet = std::set<Id>;

// Renders {a, b, c}.
std::string format_set(const VertexSet& s);

// Splits "a,b,c" into a set; empty string gives the empty set.
VertexSet parse_id_list(const std::string& text);

}  // namespace causalorder
