#include "meshpat/containment.hpp"

#include <algorithm>

namespace meshpat {

namespace {

// Column and row cuts of an occurrence: positions k[0]=0 < k[1] < ... < k[s]
// < k[s+1]=n+1 and the sorted occurrence values with the same sentinels.
struct Geometry {
    std::vector<int> k;
    std::vector<int> w;
};

Geometry geometry(const Occurrence& occ, const std::vector<int>& host) {
    int n = static_cast<int>(host.size());
    Geometry g;
    g.k.reserve(occ.size() + 2);
    g.k.push_back(0);
    int prev = 0;
    for (int pos : occ) {
        if (pos <= prev || pos > n)
            fail(Errc::invalid_occurrence, "positions must be strictly increasing in 1..n");
        g.k.push_back(pos);
        prev = pos;
    }
    g.k.push_back(n + 1);
    g.w.reserve(occ.size() + 2);
    g.w.push_back(0);
    for (int pos : occ) g.w.push_back(host[pos - 1]);
    std::sort(g.w.begin() + 1, g.w.end());
    g.w.push_back(n + 1);
    return g;
}

// Host positions strictly inside the region of small box (i, j).
bool region_interior_empty(const Geometry& g, const std::vector<int>& host, int i, int j) {
    for (int a = g.k[i] + 1; a < g.k[i + 1]; ++a) {
        int v = host[a - 1];
        if (g.w[j] < v && v < g.w[j + 1]) return false;
    }
    return true;
}

bool region_boxes_shaded(const Geometry& g, const Shading& host_shading, int i, int j) {
    return host_shading.rect_all_shaded(g.k[i], g.k[i + 1], g.w[j], g.w[j + 1]);
}

bool is_mesh_in_perm(const Geometry& g, const MeshPattern& m, const std::vector<int>& host) {
    int s = m.size();
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j)
            if (m.shading.test(i, j) && !region_interior_empty(g, host, i, j)) return false;
    return true;
}

bool is_mesh_in_mesh(const Geometry& g, const MeshPattern& m, const MeshPattern& p) {
    int s = m.size();
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j)
            if (m.shading.test(i, j)) {
                if (!region_boxes_shaded(g, p.shading, i, j)) return false;
                if (!region_interior_empty(g, p.perm, i, j)) return false;
            }
    return true;
}

// Enumerates classical occurrences in lexicographic position order, stopping
// early when the callback returns true.
template <typename Callback>
bool for_each_classical(const std::vector<int>& small, const std::vector<int>& host,
                        Callback&& cb) {
    int s = static_cast<int>(small.size());
    int n = static_cast<int>(host.size());
    if (s > n) return false;
    Occurrence occ;
    occ.reserve(s);
    // Depth-first over positions; order-isomorphism checked incrementally.
    auto extend = [&](auto&& self, int depth, int start) -> bool {
        if (depth == s) return cb(static_cast<const Occurrence&>(occ));
        for (int pos = start; pos + (s - depth - 1) <= n; ++pos) {
            int v = host[pos - 1];
            bool ok = true;
            for (int j = 0; j < depth; ++j) {
                if ((v < host[occ[j] - 1]) != (small[depth] < small[j])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            occ.push_back(pos);
            if (self(self, depth + 1, pos + 1)) return true;
            occ.pop_back();
        }
        return false;
    };
    return extend(extend, 0, 1);
}

void validate_against(const Occurrence& occ, const MeshPattern& m, const std::vector<int>& host) {
    if (static_cast<int>(occ.size()) != m.size())
        fail(Errc::invalid_occurrence, "occurrence length does not match the pattern");
    for (std::size_t a = 0; a < occ.size(); ++a)
        for (std::size_t b = a + 1; b < occ.size(); ++b)
            if ((host[occ[a] - 1] < host[occ[b] - 1]) != (m.perm[a] < m.perm[b]))
                fail(Errc::invalid_occurrence, "values are not in the pattern's relative order");
}

} // namespace

std::vector<Occurrence> classical_occurrences(const std::vector<int>& small,
                                              const std::vector<int>& host) {
    std::vector<Occurrence> out;
    for_each_classical(small, host, [&](const Occurrence& occ) {
        out.push_back(occ);
        return false;
    });
    return out;
}

Region region(const Occurrence& occ, const MeshPattern& host, GridBox b) {
    int s = static_cast<int>(occ.size());
    if (b.x < 0 || b.y < 0 || b.x > s || b.y > s)
        fail(Errc::box_out_of_grid, "box outside the small pattern's grid");
    Geometry g = geometry(occ, host.perm);
    Region r;
    for (int a = g.k[b.x]; a < g.k[b.x + 1]; ++a)
        for (int c = g.w[b.y]; c < g.w[b.y + 1]; ++c) r.boxes.push_back({a, c});
    std::sort(r.boxes.begin(), r.boxes.end());
    for (int a = g.k[b.x] + 1; a < g.k[b.x + 1]; ++a) {
        int v = host.perm[a - 1];
        if (g.w[b.y] < v && v < g.w[b.y + 1]) r.interior_points.push_back(a);
    }
    return r;
}

std::vector<Occurrence> mesh_in_perm_occurrences(const MeshPattern& m,
                                                 const std::vector<int>& host) {
    std::vector<Occurrence> out;
    for_each_classical(m.perm, host, [&](const Occurrence& occ) {
        if (is_mesh_in_perm(geometry(occ, host), m, host)) out.push_back(occ);
        return false;
    });
    return out;
}

std::vector<Occurrence> mesh_occurrences(const MeshPattern& m, const MeshPattern& p) {
    std::vector<Occurrence> out;
    for_each_classical(m.perm, p.perm, [&](const Occurrence& occ) {
        if (is_mesh_in_mesh(geometry(occ, p.perm), m, p)) out.push_back(occ);
        return false;
    });
    return out;
}

bool contains(const MeshPattern& m, const MeshPattern& p) {
    return for_each_classical(m.perm, p.perm, [&](const Occurrence& occ) {
        return is_mesh_in_mesh(geometry(occ, p.perm), m, p);
    });
}

bool occurrence_uses_box(const Occurrence& occ, const MeshPattern& m, const MeshPattern& p,
                         GridBox b) {
    validate_against(occ, m, p.perm);
    Geometry g = geometry(occ, p.perm);
    if (!is_mesh_in_mesh(g, m, p))
        fail(Errc::not_an_occurrence, "not a mesh occurrence of the pattern in the host");
    if (!p.shading.test(b))
        fail(Errc::box_not_shaded, "queried box is not shaded in the host");
    int s = m.size();
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j)
            if (m.shading.test(i, j) && g.k[i] <= b.x && b.x < g.k[i + 1] && g.w[j] <= b.y &&
                b.y < g.w[j + 1])
                return true;
    return false;
}

std::vector<GridBox> used_boxes(const Occurrence& occ, const MeshPattern& m,
                                const MeshPattern& p) {
    validate_against(occ, m, p.perm);
    Geometry g = geometry(occ, p.perm);
    if (!is_mesh_in_mesh(g, m, p))
        fail(Errc::not_an_occurrence, "not a mesh occurrence of the pattern in the host");
    std::vector<GridBox> out;
    int s = m.size();
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j)
            if (m.shading.test(i, j))
                for (int a = g.k[i]; a < g.k[i + 1]; ++a)
                    for (int c = g.w[j]; c < g.w[j + 1]; ++c)
                        if (p.shading.test(a, c)) out.push_back({a, c});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Shading max_induced_shading(const Occurrence& occ, const MeshPattern& p) {
    Geometry g = geometry(occ, p.perm);
    int s = static_cast<int>(occ.size());
    Shading a(s);
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j)
            if (region_boxes_shaded(g, p.shading, i, j) &&
                region_interior_empty(g, p.perm, i, j))
                a.set(i, j);
    return a;
}

std::pair<MeshPattern, Occurrence> delete_point(const MeshPattern& m, int x) {
    int n = m.size();
    if (n == 0) fail(Errc::empty_pattern, "cannot delete from the empty pattern");
    if (x < 1 || x > n) fail(Errc::precondition_failed, "position outside 1..n");
    Occurrence occ;
    occ.reserve(n - 1);
    std::vector<int> values;
    values.reserve(n - 1);
    for (int i = 1; i <= n; ++i)
        if (i != x) {
            occ.push_back(i);
            values.push_back(m.perm[i - 1]);
        }
    MeshPattern out{flatten(values), max_induced_shading(occ, m)};
    return {out, occ};
}

bool merges_shadings(const MeshPattern& m, int x) {
    auto [mx, occ] = delete_point(m, x);
    Geometry g = geometry(occ, m.perm);
    int s = mx.size();
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j)
            if (mx.shading.test(i, j) &&
                (g.k[i + 1] - g.k[i]) * (g.w[j + 1] - g.w[j]) >= 2)
                return true;
    return false;
}

} // namespace meshpat
