#pragma once

#include <string>
#include <vector>

#include "meshpat/pattern.hpp"

namespace meshpat {

// Textual form: "<perm>|<boxes>" where perm is a digit string for lengths up
// to 9 ("456123") or comma-separated otherwise ("10,2,9,..."), "e" for the
// empty pattern, and boxes is a semicolon-separated list of "x,y" pairs
// ("0,1;2,3"). The "|" is always printed; the box list after it is empty when
// nothing is shaded, and parse_pattern accepts input with the bar omitted.
MeshPattern parse_pattern(const std::string& text);
std::string format_pattern(const MeshPattern& m);

// Canonical key: format output (boxes sorted lexicographically), suitable for
// map keys and deduplication.
inline std::string canonical_key(const MeshPattern& m) { return format_pattern(m); }

std::string format_perm(const std::vector<int>& perm);
std::string format_box(GridBox b);

// Words over non-negative integers: digit string ("0011") or comma-separated.
std::vector<int> parse_word(const std::string& text);
std::string format_word(const std::vector<int>& word);

} // namespace meshpat
