#pragma once

#include <vector>

#include "meshpat/pattern.hpp"

namespace meshpat {

// Places t north-east of s. Shading is the union of sh(s), the translate of
// sh(t), and boundary rays: every shaded box of s on its top row or east
// column is extended across the new territory to the enlarged boundary, and
// symmetrically for translated t-boxes on the seam row or column. Requires
// the seam corners unshaded: (|s|,|s|) not in sh(s) and (0,0) not in sh(t).
MeshPattern direct_sum(const MeshPattern& s, const MeshPattern& t);

// Places t south-east of s; mirror of direct_sum under the vertical flip, so
// flip(skew_sum(s,t)) == direct_sum(flip(s), flip(t)). Requires (|s|,0) not
// in sh(s) and (0,|t|) not in sh(t).
MeshPattern skew_sum(const MeshPattern& s, const MeshPattern& t);

// The unique maximal decomposition m = m1 (+) ... (+) mk. A split is admitted
// only if refolding the two parts with direct_sum reproduces m exactly,
// including boundary rays. Returns {m} when indecomposable.
std::vector<MeshPattern> decompose(const MeshPattern& m);

// Skew analogue, computed through the flip duality.
std::vector<MeshPattern> skew_decompose(const MeshPattern& m);

bool is_indecomposable(const MeshPattern& m);
bool is_skew_indecomposable(const MeshPattern& m);

} // namespace meshpat
