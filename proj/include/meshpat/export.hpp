#pragma once

#include <string>

#include "meshpat/poset.hpp"

namespace meshpat {

// Serializes an interval as JSON: bottom, top, elements, covers, the Mobius
// value of every element, and chain statistics.
std::string interval_json(const Interval& iv);

// Serializes the Hasse diagram in Graphviz dot format, one node per element
// ranked by (length, shaded box count) and one edge per cover.
std::string interval_dot(const Interval& iv);

} // namespace meshpat
