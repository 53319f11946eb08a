#pragma once

#include <utility>
#include <vector>

#include "meshpat/pattern.hpp"

namespace meshpat {

// Strictly increasing one-based host positions, one per letter of the small
// pattern.
using Occurrence = std::vector<int>;

// The host rectangle corresponding to one small-pattern box under an
// occurrence: the host boxes it covers and the host positions strictly inside
// it.
struct Region {
    std::vector<GridBox> boxes;
    std::vector<int> interior_points;
};

// All classical (order-isomorphic subsequence) occurrences of `small` in
// `host`, in lexicographic position order. The empty pattern occurs exactly
// once, as the empty sequence.
std::vector<Occurrence> classical_occurrences(const std::vector<int>& small,
                                              const std::vector<int>& host);

// Region of small-pattern box b under occurrence occ in the host. Columns are
// bounded by the occurrence positions with sentinels 0 and n+1, rows by the
// sorted occurrence values with the same sentinels.
Region region(const Occurrence& occ, const MeshPattern& host, GridBox b);

// Classical occurrences of m.perm in host with no host point inside any
// shaded box's region.
std::vector<Occurrence> mesh_in_perm_occurrences(const MeshPattern& m, const std::vector<int>& host);

// Mesh-in-mesh occurrences: additionally every host box inside a shaded
// region must be shaded in p.
std::vector<Occurrence> mesh_occurrences(const MeshPattern& m, const MeshPattern& p);

// True iff m occurs in p, i.e. m <= p in the containment order.
bool contains(const MeshPattern& m, const MeshPattern& p);

// True iff host box b (shaded in p) lies in the region of some shaded box of
// m under occ. occ must be a mesh occurrence of m in p.
bool occurrence_uses_box(const Occurrence& occ, const MeshPattern& m, const MeshPattern& p,
                         GridBox b);

// All shaded boxes of p used by occ, sorted.
std::vector<GridBox> used_boxes(const Occurrence& occ, const MeshPattern& m, const MeshPattern& p);

// The maximal shading A(occ) on the small grid: boxes whose region has no
// interior point and all of whose region boxes are shaded in p. For any
// S subseteq A(occ), (flatten(values at occ), S) <= p via occ.
Shading max_induced_shading(const Occurrence& occ, const MeshPattern& p);

// Deletes the point at position x (1 <= x <= n). The result carries the
// maximal shading for which the remaining positions form a mesh occurrence in
// m; that occurrence (1..n without x) is returned alongside.
std::pair<MeshPattern, Occurrence> delete_point(const MeshPattern& m, int x);

// True iff some shaded box of delete_point(m, x) covers two or more shaded
// boxes of m under the identity occurrence.
bool merges_shadings(const MeshPattern& m, int x);

} // namespace meshpat
