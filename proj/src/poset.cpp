#include "meshpat/poset.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <set>
#include <unordered_set>

#include "meshpat/sums.hpp"

namespace meshpat {

namespace {

std::vector<std::uint64_t> make_bitset(int n) {
    return std::vector<std::uint64_t>((static_cast<std::size_t>(n) + 63) / 64, 0);
}

void bit_set(std::vector<std::uint64_t>& w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool bit_test(const std::vector<std::uint64_t>& w, int i) {
    return (w[i >> 6] >> (i & 63)) & 1;
}

void bit_or(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
    for (std::size_t i = 0; i < into.size(); ++i) into[i] |= from[i];
}

// Fills less-bitsets and the cover list of an interval whose elements are
// already sorted by (length, shading size, perm, shading) -- a linear
// extension, since q < r forces |q| < |r| or equal length with fewer shaded
// boxes. strictly_less_fn(i, j) is only consulted for i < j.
template <typename Less>
void finish_interval(Interval& iv, Less&& strictly_less_fn) {
    const int n = iv.size();
    iv.less.assign(n, make_bitset(n));
    // greater[j] holds the i below j; used for the transitive reduction.
    std::vector<std::vector<std::uint64_t>> greater(n, make_bitset(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            const MeshPattern& a = iv.elements[i];
            const MeshPattern& b = iv.elements[j];
            if (a.dim() >= b.dim()) continue;
            if (!strictly_less_fn(i, j)) continue;
            bit_set(iv.less[i], j);
            bit_set(greater[j], i);
        }
    iv.covers.clear();
    std::vector<std::uint64_t> dominated;
    for (int j = 0; j < n; ++j) {
        dominated = make_bitset(n);
        // Descending index visits each candidate before anything below it, so
        // an undominated candidate is a cover and everything under it is not.
        for (int i = j - 1; i >= 0; --i) {
            if (!bit_test(greater[j], i) || bit_test(dominated, i)) continue;
            iv.covers.push_back({i, j});
            bit_or(dominated, greater[i]);
        }
    }
    std::sort(iv.covers.begin(), iv.covers.end());
}

int index_of(const Interval& iv, const MeshPattern& m) {
    auto it = std::lower_bound(iv.elements.begin(), iv.elements.end(), m);
    if (it == iv.elements.end() || !(*it == m)) return -1;
    return static_cast<int>(it - iv.elements.begin());
}

} // namespace

std::vector<int> Interval::upper_covers(int i) const {
    std::vector<int> out;
    for (const auto& [lo, hi] : covers)
        if (lo == i) out.push_back(hi);
    return out;
}

std::vector<MeshPattern> patterns_below(const MeshPattern& p, int min_len, const Config& cfg) {
    if (min_len < 0) min_len = 0;
    if (p.size() > cfg.max_len)
        fail(Errc::budget_exceeded,
             "pattern length " + std::to_string(p.size()) + " exceeds max_len " +
                 std::to_string(cfg.max_len));
    const int n = p.size();
    long long emitted = 0;
    std::set<MeshPattern> out;
    // Every subset of positions is one classical occurrence of its own
    // flattening; expanding each over all subsets of its maximal induced
    // shading covers the whole order ideal.
    for (unsigned subset = 0; subset < (1u << n); ++subset) {
        const int len = __builtin_popcount(subset);
        if (len < min_len) continue;
        Occurrence occ;
        std::vector<int> values;
        for (int i = 0; i < n; ++i)
            if (subset >> i & 1) {
                occ.push_back(i + 1);
                values.push_back(p.perm[i]);
            }
        Shading a = max_induced_shading(occ, p);
        std::vector<GridBox> boxes = a.boxes();
        const int k = static_cast<int>(boxes.size());
        emitted += 1LL << k;
        if (emitted > cfg.budget)
            fail(Errc::budget_exceeded,
                 "enumeration exceeded budget of " + std::to_string(cfg.budget) + " emissions");
        std::vector<int> small_perm = flatten(values);
        for (unsigned s = 0; s < (1u << k); ++s) {
            MeshPattern q{small_perm, Shading(len)};
            for (int b = 0; b < k; ++b)
                if (s >> b & 1) q.shading.set(boxes[b]);
            out.insert(std::move(q));
        }
    }
    return {out.begin(), out.end()};
}

Interval interval(const MeshPattern& m, const MeshPattern& p, const Config& cfg) {
    if (!contains(m, p)) fail(Errc::not_comparable, "bottom is not contained in top");
    Interval iv;
    iv.bottom = m;
    iv.top = p;
    for (MeshPattern& q : patterns_below(p, m.size(), cfg))
        if (contains(m, q)) iv.elements.push_back(std::move(q));
    finish_interval(iv, [&iv](int i, int j) {
        return contains(iv.elements[i], iv.elements[j]);
    });
    iv.bottom_index = index_of(iv, m);
    iv.top_index = index_of(iv, p);
    return iv;
}

Interval subinterval(const Interval& iv, int lo, int hi) {
    if (!iv.leq(lo, hi)) fail(Errc::not_comparable, "subinterval endpoints are not comparable");
    Interval out;
    out.bottom = iv.elements[lo];
    out.top = iv.elements[hi];
    std::vector<int> picked;
    for (int x = 0; x < iv.size(); ++x)
        if (iv.leq(lo, x) && iv.leq(x, hi)) {
            picked.push_back(x);
            out.elements.push_back(iv.elements[x]);
        }
    finish_interval(out, [&](int i, int j) {
        return iv.strictly_less(picked[i], picked[j]);
    });
    out.bottom_index = index_of(out, out.bottom);
    out.top_index = index_of(out, out.top);
    return out;
}

std::vector<long long> mobius_all(const Interval& iv) {
    std::vector<long long> mu(iv.size(), 0);
    mu[iv.bottom_index] = 1;
    for (int j = 0; j < iv.size(); ++j) {
        if (j == iv.bottom_index) continue;
        long long s = 0;
        for (int i = 0; i < j; ++i)
            if (iv.strictly_less(i, j)) s += mu[i];
        mu[j] = -s;
    }
    return mu;
}

long long mobius(const Interval& iv) { return mobius_all(iv)[iv.top_index]; }

long long mobius(const MeshPattern& m, const MeshPattern& p, const Config& cfg) {
    if (!contains(m, p)) return 0;
    return mobius(interval(m, p, cfg));
}

namespace {

using U128 = unsigned __int128;
using I128 = __int128;

void add_checked(U128& into, U128 add) {
    U128 next = into + add;
    if (next < into) fail(Errc::budget_exceeded, "chain count overflow");
    into = next;
}

} // namespace

long long mobius_via_chains(const Interval& iv) {
    const int n = iv.size();
    // counts[x] = number of chains of the current length from bottom to x.
    std::vector<U128> counts(n, 0);
    counts[iv.bottom_index] = 1;
    I128 total = iv.bottom_index == iv.top_index ? 1 : 0;
    int sign = -1; // next length is 1
    while (true) {
        std::vector<U128> next(n, 0);
        bool any = false;
        for (int j = 0; j < n; ++j) {
            U128 acc = 0;
            for (int i = 0; i < j; ++i)
                if (counts[i] != 0 && iv.strictly_less(i, j)) add_checked(acc, counts[i]);
            if (acc != 0) any = true;
            next[j] = acc;
        }
        if (!any) break;
        total += static_cast<I128>(sign) * static_cast<I128>(next[iv.top_index]);
        sign = -sign;
        counts.swap(next);
    }
    if (total > static_cast<I128>(LLONG_MAX) || total < -static_cast<I128>(LLONG_MAX))
        fail(Errc::budget_exceeded, "alternating chain sum outside 64-bit range");
    return static_cast<long long>(total);
}

long long mobius_via_chains(const MeshPattern& m, const MeshPattern& p, const Config& cfg) {
    if (!contains(m, p)) fail(Errc::not_comparable, "bottom is not contained in top");
    return mobius_via_chains(interval(m, p, cfg));
}

ChainStats chain_stats(const Interval& iv) {
    const int n = iv.size();
    // to_top[x]: histogram of cover-path lengths from x to top. Elements are
    // processed in reverse linear-extension order so covers point forward.
    std::vector<std::map<int, long long>> to_top(n);
    std::vector<std::vector<int>> ups(n);
    for (const auto& [lo, hi] : iv.covers) ups[lo].push_back(hi);
    to_top[iv.top_index][0] = 1;
    for (int x = n - 1; x >= 0; --x) {
        if (x == iv.top_index) continue;
        for (int up : ups[x])
            for (const auto& [len, cnt] : to_top[up]) {
                long long& slot = to_top[x][len + 1];
                if (__builtin_add_overflow(slot, cnt, &slot))
                    fail(Errc::budget_exceeded, "maximal chain count overflow");
            }
    }
    ChainStats st;
    st.lengths = to_top[iv.bottom_index];
    if (st.lengths.empty()) st.lengths[0] = 1; // single-element interval
    st.dimension = st.lengths.rbegin()->first;
    st.is_pure = st.lengths.size() == 1;
    return st;
}

int interval_dimension_bottom(const MeshPattern& m) {
    if (m.size() < 1) fail(Errc::precondition_failed, "pattern must have at least one point");
    return m.dim();
}

bool is_impure_edge(const MeshPattern& a, const MeshPattern& b, const Interval& iv) {
    const int i = index_of(iv, a);
    const int j = index_of(iv, b);
    if (i < 0 || j < 0 ||
        !std::binary_search(iv.covers.begin(), iv.covers.end(), std::pair<int, int>{i, j}))
        fail(Errc::not_a_cover, "edge is not a cover of the interval");
    return b.dim() - a.dim() > 1;
}

namespace {

int missing_position(const Occurrence& occ, int n) {
    int present = 0;
    for (int pos : occ) present |= 1 << (pos - 1);
    for (int x = 1; x <= n; ++x)
        if (!(present >> (x - 1) & 1)) return x;
    return 0;
}

// True when some mesh occurrence of small in host, other than `skip`, uses a
// subset (strict if proper) of the host boxes in `reference_used`.
bool other_occurrence_within(const MeshPattern& small, const MeshPattern& host,
                             const Occurrence& skip, const std::vector<GridBox>& reference_used,
                             bool proper) {
    for (const Occurrence& occ : mesh_occurrences(small, host)) {
        if (occ == skip) continue;
        std::vector<GridBox> used = used_boxes(occ, small, host);
        if (!std::includes(reference_used.begin(), reference_used.end(), used.begin(),
                           used.end()))
            continue;
        if (proper && used == reference_used) continue;
        return true;
    }
    return false;
}

} // namespace

bool classify_impure_edge(const MeshPattern& a, const MeshPattern& b) {
    if (b.size() != a.size() + 1)
        fail(Errc::precondition_failed, "patterns must differ in length by one");
    std::vector<Occurrence> occs = mesh_occurrences(a, b);
    if (occs.empty()) fail(Errc::precondition_failed, "smaller pattern does not occur in larger");
    const std::vector<GridBox> all = b.shading.boxes();
    for (const Occurrence& occ : occs) {
        if (used_boxes(occ, a, b) != all) return false;
        if (!merges_shadings(b, missing_position(occ, b.size()))) return false;
    }
    return true;
}

std::optional<int> nonpure_witness(const MeshPattern& m, bool proper_subset_rule) {
    if (m.size() < 1) fail(Errc::precondition_failed, "pattern must have at least one point");
    for (int x = 1; x <= m.size(); ++x) {
        if (!merges_shadings(m, x)) continue;
        auto [mx, occx] = delete_point(m, x);
        std::vector<GridBox> used = used_boxes(occx, mx, m);
        if (!other_occurrence_within(mx, m, occx, used, proper_subset_rule)) return x;
    }
    return std::nullopt;
}

bool is_nonpure_from_singleton(const MeshPattern& m, bool proper_subset_rule) {
    return nonpure_witness(m, proper_subset_rule).has_value();
}

bool has_impure_edge(const MeshPattern& m, const MeshPattern& p, bool proper_subset_rule) {
    if (!contains(m, p)) fail(Errc::not_comparable, "bottom is not contained in top");
    for (int x = 1; x <= p.size(); ++x) {
        if (!merges_shadings(p, x)) continue;
        auto [px, occx] = delete_point(p, x);
        if (!contains(m, px)) continue;
        std::vector<GridBox> used = used_boxes(occx, px, p);
        if (!other_occurrence_within(px, p, occx, used, proper_subset_rule)) return true;
    }
    return false;
}

std::vector<std::vector<int>> components(const Interval& iv) {
    std::vector<int> open;
    for (int x = 0; x < iv.size(); ++x)
        if (x != iv.bottom_index && x != iv.top_index) open.push_back(x);
    std::vector<char> seen(iv.size(), 0);
    std::vector<std::vector<int>> comps;
    for (int start : open) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int y : open)
                if (!seen[y] && iv.strictly_less(std::min(x, y), std::max(x, y))) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return comps;
}

bool is_strongly_disconnected(const Interval& iv) {
    int nontrivial = 0;
    for (const auto& c : components(iv))
        if (c.size() >= 2) ++nontrivial;
    return nontrivial >= 2;
}

bool is_disconnected(const Interval& iv) { return components(iv).size() >= 2; }

bool is_chain(const Interval& iv) {
    for (int i = 0; i + 1 < iv.size(); ++i)
        if (!iv.strictly_less(i, i + 1)) return false;
    return true;
}

OrderComplex order_complex(const Interval& iv) {
    OrderComplex c;
    for (int x = 0; x < iv.size(); ++x)
        if (x != iv.bottom_index && x != iv.top_index) c.vertices.push_back(x);
    // Maximal chains of the open interval are exactly the maximal closed
    // chains with the endpoints removed, i.e. bottom-to-top cover paths.
    std::vector<std::vector<int>> ups(iv.size());
    for (const auto& [lo, hi] : iv.covers) ups[lo].push_back(hi);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int x) -> void {
        if (x == iv.top_index) {
            if (!path.empty()) {
                c.facets.push_back(path);
                if (c.facets.size() > 1'000'000)
                    fail(Errc::budget_exceeded, "too many maximal chains to enumerate");
            }
            return;
        }
        if (x != iv.bottom_index) path.push_back(x);
        for (int next : ups[x]) self(self, next);
        if (x != iv.bottom_index) path.pop_back();
    };
    if (iv.bottom_index != iv.top_index) dfs(dfs, iv.bottom_index);
    return c;
}

namespace {

bool attach_ok(std::uint64_t facet, const std::vector<std::uint64_t>& previous) {
    std::vector<std::uint64_t> inters;
    bool any = false;
    for (std::uint64_t p : previous) {
        std::uint64_t x = facet & p;
        if (x) {
            any = true;
            inters.push_back(x);
        }
    }
    if (!any) return __builtin_popcountll(facet) == 1;
    const int want = __builtin_popcountll(facet) - 1;
    for (std::size_t i = 0; i < inters.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < inters.size(); ++j)
            if (i != j && (inters[i] & ~inters[j]) == 0 &&
                (inters[i] != inters[j] || j < i)) {
                maximal = false;
                break;
            }
        if (maximal && __builtin_popcountll(inters[i]) != want) return false;
    }
    return true;
}

} // namespace

std::optional<std::vector<int>> find_shelling(const OrderComplex& complex, const Config& cfg) {
    const int t = static_cast<int>(complex.facets.size());
    if (complex.vertices.size() > 64)
        fail(Errc::too_large, "complex has more than 64 vertices");
    // Compact vertex ids so facets pack into one word each.
    std::map<int, int> vid;
    for (int v : complex.vertices) vid.emplace(v, static_cast<int>(vid.size()));
    std::vector<std::uint64_t> masks;
    for (const auto& f : complex.facets) {
        std::uint64_t m = 0;
        for (int v : f) m |= std::uint64_t{1} << vid.at(v);
        masks.push_back(m);
    }
    // Non-shellability certificate: two or more vertex-connected components
    // each holding an edge can never be shelled, whatever the order.
    {
        std::vector<int> comp(t, -1);
        int ncomp = 0;
        for (int i = 0; i < t; ++i) {
            if (comp[i] >= 0) continue;
            comp[i] = ncomp;
            std::vector<int> stack{i};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int j = 0; j < t; ++j)
                    if (comp[j] < 0 && (masks[x] & masks[j])) {
                        comp[j] = ncomp;
                        stack.push_back(j);
                    }
            }
            ++ncomp;
        }
        std::vector<char> has_edge(ncomp, 0);
        for (int i = 0; i < t; ++i)
            if (__builtin_popcountll(masks[i]) >= 2) has_edge[comp[i]] = 1;
        if (std::count(has_edge.begin(), has_edge.end(), 1) >= 2) return std::nullopt;
    }
    if (cfg.paper_shelling) {
        // Literal convention: the intersection must match the new facet's own
        // dimension, which a distinct facet can never do.
        if (t <= 1) {
            std::vector<int> order(t);
            return order;
        }
        return std::nullopt;
    }
    if (t > cfg.shelling_cap)
        fail(Errc::budget_exceeded,
             "facet count " + std::to_string(t) + " exceeds shelling cap " +
                 std::to_string(cfg.shelling_cap));
    if (t <= 1) {
        std::vector<int> order;
        if (t == 1) order.push_back(0);
        return order;
    }
    if (t > 63) fail(Errc::too_large, "more than 63 facets");

    // Whether a prefix works depends only on its facet set, so failed sets
    // are memoised. Larger facets are tried first; a shellable complex always
    // admits an order of weakly decreasing facet size.
    std::vector<int> by_size(t);
    for (int i = 0; i < t; ++i) by_size[i] = i;
    std::sort(by_size.begin(), by_size.end(), [&](int a, int b) {
        int pa = __builtin_popcountll(masks[a]);
        int pb = __builtin_popcountll(masks[b]);
        return pa != pb ? pa > pb : a < b;
    });
    std::unordered_set<std::uint64_t> failed;
    long long nodes = 0;
    std::vector<int> order;
    std::vector<std::uint64_t> chosen;
    const std::uint64_t all = (std::uint64_t{1} << t) - 1;

    auto dfs = [&](auto&& self, std::uint64_t used) -> bool {
        if (used == all) return true;
        if (failed.count(used)) return false;
        if (++nodes > cfg.shelling_budget)
            fail(Errc::budget_exceeded, "shelling search budget exhausted");
        for (int f : by_size) {
            if (used >> f & 1) continue;
            if (used != 0 && !attach_ok(masks[f], chosen)) continue;
            order.push_back(f);
            chosen.push_back(masks[f]);
            if (self(self, used | (std::uint64_t{1} << f))) return true;
            order.pop_back();
            chosen.pop_back();
        }
        failed.insert(used);
        return false;
    };
    if (dfs(dfs, 0)) return order;
    return std::nullopt;
}

Interval strongly_disconnected_sum(const MeshPattern& m, const Config& cfg) {
    const int n = m.size();
    if (!is_indecomposable(m))
        fail(Errc::precondition_failed, "pattern is decomposable");
    if (m.dim() <= 1) fail(Errc::precondition_failed, "pattern dimension must exceed 1");
    if (m.shading.test(0, 0) || m.shading.test(n, n))
        fail(Errc::precondition_failed, "diagonal corner boxes must be unshaded");
    return interval(m, direct_sum(m, m), cfg);
}

// ---------------------------------------------------------------------------
// Dimension-graded sweep over all patterns of length <= 3.

namespace {

struct SweepPerm {
    std::vector<int> perm;
    int grid_bits = 0; // (len+1)^2
    // One entry per position subset: the flattened pattern's global perm id
    // and, per small box, interior-emptiness plus the host-box mask.
    struct Occ {
        int tau = 0;
        std::vector<char> interior_free;
        std::vector<std::uint32_t> host_mask;
        int small_boxes = 0;
    };
    std::vector<Occ> occs;
};

int box_bit(int grid, GridBox b) { return b.x * grid + b.y; }

} // namespace

struct TableBuilder {
    SingletonMobiusTable& t;
    std::vector<SweepPerm> perms;
    std::map<std::vector<int>, int> perm_id;
    // Zeta-transformed tables over shading masks: z[perm][M] sums mu over all
    // shadings contained in M; zc[k][perm][M] does the same for length-k
    // chain counts from the bottom.
    std::vector<std::vector<long long>> z;
    std::vector<std::vector<std::vector<U128>>> zc;
    static constexpr int max_chain_len = 19;

    explicit TableBuilder(SingletonMobiusTable& table) : t(table) {
        std::vector<std::vector<int>> all = {{1}, {1, 2}, {2, 1}};
        std::vector<int> base{1, 2, 3};
        std::sort(base.begin(), base.end());
        do all.push_back(base);
        while (std::next_permutation(base.begin(), base.end()));
        for (const auto& p : all) {
            perm_id[p] = static_cast<int>(perms.size());
            perms.push_back(make_sweep_perm(p));
        }
        for (const auto& sp : perms) {
            z.emplace_back(std::size_t{1} << sp.grid_bits, 0);
            t.mu_.emplace_back(std::size_t{1} << sp.grid_bits, 0);
            t.perms_.push_back(sp.perm);
        }
        zc.assign(max_chain_len, {});
        for (auto& layer : zc)
            for (const auto& sp : perms)
                layer.emplace_back(std::size_t{1} << sp.grid_bits, 0);
        run();
    }

    SweepPerm make_sweep_perm(const std::vector<int>& p) {
        SweepPerm sp;
        sp.perm = p;
        const int n = static_cast<int>(p.size());
        sp.grid_bits = (n + 1) * (n + 1);
        MeshPattern host = classical(p);
        for (unsigned subset = 1; subset < (1u << n); ++subset) {
            SweepPerm::Occ o;
            Occurrence occ;
            std::vector<int> values;
            for (int i = 0; i < n; ++i)
                if (subset >> i & 1) {
                    occ.push_back(i + 1);
                    values.push_back(p[i]);
                }
            const int s = static_cast<int>(occ.size());
            o.tau = perm_id.count(flatten(values)) ? perm_id[flatten(values)] : -1;
            o.small_boxes = (s + 1) * (s + 1);
            o.interior_free.resize(o.small_boxes);
            o.host_mask.resize(o.small_boxes);
            for (int x = 0; x <= s; ++x)
                for (int y = 0; y <= s; ++y) {
                    Region r = region(occ, host, {x, y});
                    int bit = x * (s + 1) + y;
                    o.interior_free[bit] = r.interior_points.empty();
                    std::uint32_t mask = 0;
                    for (GridBox hb : r.boxes) mask |= 1u << box_bit(n + 1, hb);
                    o.host_mask[bit] = mask;
                }
            sp.occs.push_back(std::move(o));
        }
        return sp;
    }

    // tau -> deduplicated downset masks contributed by the occurrences of p.
    void gather(const SweepPerm& sp, std::uint32_t shading,
                std::map<int, std::vector<std::uint32_t>>& groups) {
        groups.clear();
        for (const auto& o : sp.occs) {
            if (o.tau < 0) continue;
            std::uint32_t a = 0;
            for (int b = 0; b < o.small_boxes; ++b)
                if (o.interior_free[b] && (o.host_mask[b] & ~shading) == 0) a |= 1u << b;
            auto& list = groups[o.tau];
            if (std::find(list.begin(), list.end(), a) == list.end()) list.push_back(a);
        }
    }

    template <typename Table>
    auto union_sum(const Table& table, const std::map<int, std::vector<std::uint32_t>>& groups)
        -> typename Table::value_type::value_type {
        using Val = typename Table::value_type::value_type;
        Val total = 0;
        for (const auto& [tau, list] : groups) {
            const auto& row = table[tau];
            const int r = static_cast<int>(list.size());
            for (unsigned pick = 1; pick < (1u << r); ++pick) {
                std::uint32_t meet = ~0u;
                for (int i = 0; i < r; ++i)
                    if (pick >> i & 1) meet &= list[i];
                Val v = row[meet];
                total += __builtin_popcount(pick) % 2 ? v : Val(0) - v;
            }
        }
        return total;
    }

    template <typename Row, typename Val>
    void fold(Row& row, std::uint32_t mask, std::uint32_t full, Val value) {
        const std::uint32_t comp = full & ~mask;
        std::uint32_t sub = comp;
        while (true) {
            row[mask | sub] += value;
            if (sub == 0) break;
            sub = (sub - 1) & comp;
        }
    }

    void run() {
        // Masks bucketed by popcount per grid size keep the sweep graded by
        // dimension, so every strictly smaller pattern is folded in before it
        // is needed.
        std::map<int, std::vector<std::vector<std::uint32_t>>> by_pop;
        for (const auto& sp : perms)
            if (!by_pop.count(sp.grid_bits)) {
                auto& buckets = by_pop[sp.grid_bits];
                buckets.assign(sp.grid_bits + 1, {});
                for (std::uint32_t m = 0; m < (std::uint32_t{1} << sp.grid_bits); ++m)
                    buckets[__builtin_popcount(m)].push_back(m);
            }
        std::map<int, std::vector<std::uint32_t>> groups;
        for (int dim = 1; dim <= 3 + 16; ++dim) {
            for (std::size_t pi = 0; pi < perms.size(); ++pi) {
                const SweepPerm& sp = perms[pi];
                const int len = static_cast<int>(sp.perm.size());
                const int shaded = dim - len;
                if (shaded < 0 || shaded > sp.grid_bits) continue;
                const std::uint32_t full = (std::uint32_t{1} << sp.grid_bits) - 1;
                for (std::uint32_t mask : by_pop[sp.grid_bits][shaded]) {
                    gather(sp, mask, groups);
                    const bool is_bottom = len == 1 && mask == 0;
                    long long mu = (is_bottom ? 1 : 0) - union_sum(z, groups);
                    t.mu_[pi][mask] = mu;
                    I128 hall = is_bottom ? 1 : 0; // length-0 chains
                    // Read every chain count before folding any of them: the
                    // identity occurrence makes one A-mask equal this pattern's
                    // own shading, so folding C_k first would let the k+1 read
                    // count chains ending here as ending strictly below.
                    std::array<U128, max_chain_len> counts{};
                    int sign = -1;
                    for (int k = 1; k <= dim - 1; ++k) {
                        counts[k] = static_cast<U128>(union_sum(zc[k - 1], groups));
                        hall += static_cast<I128>(sign) * static_cast<I128>(counts[k]);
                        sign = -sign;
                    }
                    for (int k = 1; k <= dim - 1; ++k)
                        if (counts[k] != 0) fold(zc[k][pi], mask, full, counts[k]);
                    if (is_bottom) fold(zc[0][pi], mask, full, U128{1});
                    if (hall != static_cast<I128>(mu)) ++t.hall_mismatches_;
                    if (mu != 0) fold(z[pi], mask, full, static_cast<long long>(mu));
                    ++t.processed_;
                }
            }
        }
    }
};

SingletonMobiusTable::SingletonMobiusTable() {
    TableBuilder builder(*this);
}

long long SingletonMobiusTable::mu(const MeshPattern& p) const {
    for (std::size_t i = 0; i < perms_.size(); ++i) {
        if (perms_[i] != p.perm) continue;
        const int grid = p.size() + 1;
        std::uint32_t mask = 0;
        for (GridBox b : p.shading.boxes()) mask |= 1u << box_bit(grid, b);
        return mu_[i][mask];
    }
    fail(Errc::too_large, "table only holds patterns of length 1 to 3");
}

} // namespace meshpat
