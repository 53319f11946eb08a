#include "meshpat/sums.hpp"

#include <algorithm>

namespace meshpat {

MeshPattern direct_sum(const MeshPattern& s, const MeshPattern& t) {
    int a = s.size();
    int b = t.size();
    int n = a + b;
    if (s.shading.test(a, a))
        fail(Errc::corner_shaded, "top right corner of the first summand is shaded");
    if (t.shading.test(0, 0))
        fail(Errc::corner_shaded, "bottom left corner of the second summand is shaded");

    MeshPattern out{std::vector<int>(), Shading(n)};
    out.perm.reserve(n);
    for (int v : s.perm) out.perm.push_back(v);
    for (int v : t.perm) out.perm.push_back(v + a);

    for (GridBox box : s.shading.boxes()) {
        out.shading.set(box);
        // Boxes on the old north boundary sweep up the new column span, boxes
        // on the old east boundary sweep across the new row span.
        if (box.y == a)
            for (int y = a; y <= n; ++y) out.shading.set(box.x, y);
        if (box.x == a)
            for (int x = a; x <= n; ++x) out.shading.set(x, box.y);
    }
    for (GridBox box : t.shading.boxes()) {
        GridBox moved{box.x + a, box.y + a};
        out.shading.set(moved);
        if (box.y == 0)
            for (int y = 0; y <= a; ++y) out.shading.set(moved.x, y);
        if (box.x == 0)
            for (int x = 0; x <= a; ++x) out.shading.set(x, moved.y);
    }
    return out;
}

MeshPattern skew_sum(const MeshPattern& s, const MeshPattern& t) {
    int a = s.size();
    int b = t.size();
    int n = a + b;
    if (s.shading.test(a, 0))
        fail(Errc::corner_shaded, "bottom right corner of the first summand is shaded");
    if (t.shading.test(0, b))
        fail(Errc::corner_shaded, "top left corner of the second summand is shaded");

    MeshPattern out{std::vector<int>(), Shading(n)};
    out.perm.reserve(n);
    for (int v : s.perm) out.perm.push_back(v + b);
    for (int v : t.perm) out.perm.push_back(v);

    for (GridBox box : s.shading.boxes()) {
        out.shading.set(box.x, box.y + b);
        if (box.y == 0)
            for (int y = 0; y <= b; ++y) out.shading.set(box.x, y);
        if (box.x == a)
            for (int x = a; x <= n; ++x) out.shading.set(x, box.y + b);
    }
    for (GridBox box : t.shading.boxes()) {
        out.shading.set(box.x + a, box.y);
        if (box.y == b)
            for (int y = b; y <= n; ++y) out.shading.set(box.x + a, y);
        if (box.x == 0)
            for (int x = 0; x <= a; ++x) out.shading.set(x, box.y);
    }
    return out;
}

namespace {

// Restriction of m to the subgrid [lo, hi] x [lo, hi], reindexed to start at
// zero, with the corresponding subsequence of the permutation flattened.
MeshPattern restrict_block(const MeshPattern& m, int lo, int hi) {
    std::vector<int> values;
    for (int i = lo + 1; i <= hi; ++i) values.push_back(m.perm[i - 1]);
    MeshPattern out{flatten(values), Shading(hi - lo)};
    for (int x = lo; x <= hi; ++x)
        for (int y = lo; y <= hi; ++y)
            if (m.shading.test(x, y)) out.shading.set(x - lo, y - lo);
    return out;
}

// Finds the smallest admissible split point, or 0 if none.
int first_split(const MeshPattern& m) {
    int n = m.size();
    for (int d = 1; d < n; ++d) {
        int max_prefix = 0;
        for (int i = 0; i < d; ++i) max_prefix = std::max(max_prefix, m.perm[i]);
        if (max_prefix != d) continue;
        if (m.shading.test(d, d)) continue;
        MeshPattern a = restrict_block(m, 0, d);
        MeshPattern b = restrict_block(m, d, n);
        if (direct_sum(a, b) == m) return d;
    }
    return 0;
}

} // namespace

std::vector<MeshPattern> decompose(const MeshPattern& m) {
    std::vector<MeshPattern> parts;
    MeshPattern rest = m;
    while (true) {
        int d = first_split(rest);
        if (d == 0) {
            parts.push_back(rest);
            return parts;
        }
        parts.push_back(restrict_block(rest, 0, d));
        rest = restrict_block(rest, d, rest.size());
    }
}

std::vector<MeshPattern> skew_decompose(const MeshPattern& m) {
    std::vector<MeshPattern> parts;
    for (const MeshPattern& part : decompose(flip(m))) parts.push_back(flip(part));
    return parts;
}

bool is_indecomposable(const MeshPattern& m) { return decompose(m).size() == 1; }

bool is_skew_indecomposable(const MeshPattern& m) { return skew_decompose(m).size() == 1; }

} // namespace meshpat
