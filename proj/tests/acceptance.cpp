// Acceptance suite: thirteen numbered criteria, one PASS/FAIL line each plus
// indented notes. The process exit code is the number of failed criteria, so
// a clean run exits 0.
#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "meshpat/containment.hpp"
#include "meshpat/errors.hpp"
#include "meshpat/pattern.hpp"
#include "meshpat/poset.hpp"
#include "meshpat/statistics.hpp"
#include "meshpat/sums.hpp"
#include "meshpat/text.hpp"
#include "meshpat/word_poset.hpp"

using namespace meshpat;

namespace {

MeshPattern P(const std::string& text) { return parse_pattern(text); }

// Everything any criterion computes funnels through these counters so the
// final criterion can certify that the independent routes agreed everywhere.
struct CrossChecks {
    long long intervals = 0;
    long long mismatches = 0;
    long long table_lookups = 0;
    long long table_mismatches = 0;
    std::vector<std::string> details;
};
CrossChecks g_cross;

long long checked_mobius(const Interval& iv) {
    const long long rec = mobius(iv);
    const long long chains = mobius_via_chains(iv);
    ++g_cross.intervals;
    if (rec != chains) {
        ++g_cross.mismatches;
        if (g_cross.details.size() < 5)
            g_cross.details.push_back("[" + format_pattern(iv.bottom) + ", " +
                                      format_pattern(iv.top) + "]: recursion " +
                                      std::to_string(rec) + " vs chains " +
                                      std::to_string(chains));
    }
    return rec;
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& text) { notes.push_back(text); }
};

const SingletonMobiusTable& singleton_table() {
    static SingletonMobiusTable table;
    return table;
}

std::vector<std::vector<int>> perms_of(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MeshPattern pattern_from_mask(const std::vector<int>& perm, unsigned mask) {
    const int grid = static_cast<int>(perm.size()) + 1;
    std::vector<GridBox> boxes;
    for (int bit = 0; bit < grid * grid; ++bit)
        if ((mask >> bit) & 1) boxes.push_back({bit / grid, bit % grid});
    return new_mesh_pattern(perm, boxes);
}

// All one-descent patterns with the value 1 at the descent bottom and the
// full shaded strip below the prefix, indexed by the set of values placed
// before the 1.
std::vector<MeshPattern> gamma_members(int n) {
    std::vector<MeshPattern> out;
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> before, after;
        for (int v = 2; v <= n; ++v) ((mask >> (v - 2)) & 1 ? before : after).push_back(v);
        std::vector<int> perm = before;
        perm.push_back(1);
        perm.insert(perm.end(), after.begin(), after.end());
        std::vector<GridBox> boxes;
        for (int a = 0; a <= static_cast<int>(before.size()); ++a) boxes.push_back({a, 0});
        out.push_back(new_mesh_pattern(perm, boxes));
    }
    return out;
}

std::vector<int> random_perm(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[static_cast<int>(rng.next_below(i + 1))]);
    return perm;
}

Outcome criterion1() {
    Outcome out;
    MeshPattern small = P("12|0,1;0,2;2,2");
    MeshPattern host = P("123|0,0;0,2;0,3;1,1;1,2;1,3;2,1;2,2;3,3");
    out.require(contains(small, host), "containment holds");
    std::vector<Occurrence> occs = mesh_occurrences(small, host);
    out.require(occs.size() == 1 && occs[0] == Occurrence{2, 3}, "witness is exactly (2,3)");
    Region r = region({2, 3}, host, {0, 0});
    const std::vector<GridBox> want{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    out.require(r.boxes == want, "region of box (0,0) is the 2x2 corner block");
    out.require(r.interior_points.size() == 1, "region has exactly one interior point");
    return out;
}

Outcome criterion2() {
    Outcome out;
    Interval iv = interval(P("1|"), P("123|0,3;1,3;2,3"));
    out.require(iv.size() == 14, "interval has 14 elements");
    checked_mobius(iv);
    ChainStats st = chain_stats(iv);
    out.require(!st.is_pure, "interval is nonpure");
    out.require(st.lengths.count(3) == 1 && st.lengths.at(3) == 1,
                "exactly one maximal chain of length 3");
    out.require(st.lengths.count(4) == 1 && st.lengths.at(4) == 2,
                "exactly two maximal chains of length 4");
    const int bound = interval_dimension_bottom(iv.top);
    out.require(st.dimension == 5, "measured dimension is 5");
    out.require(bound == 6, "closed-form rank bound is 6");
    out.note("measured dimension " + std::to_string(st.dimension) + ", rank bound " +
             std::to_string(bound) + ": the bound overshoots the longest chain by one");
    return out;
}

Outcome criterion3() {
    Outcome out;
    Interval mesh_iv = interval(P("1|0,1"), P("123|0,2;0,3;1,2;1,3"));
    out.require(checked_mobius(mesh_iv) == 1, "mesh mobius is 1");
    Interval classic = interval(P("1|"), P("123|"));
    out.require(checked_mobius(classic) == 0, "classical mobius of (1, 123) is 0");
    return out;
}

Outcome criterion4() {
    Outcome out;
    Config cfg;
    cfg.shelling_cap = 32;
    Rng rng(4001);
    int by_gap[5] = {0, 0, 0, 0, 0};
    for (int round = 0; round < 50 && out.pass; ++round) {
        const int n = 1 + static_cast<int>(rng.next_below(4));
        const int grid = n + 1;
        const int gap = round % 5;
        std::vector<int> perm = random_perm(n, rng);

        std::vector<GridBox> pool;
        for (int x = 0; x < grid; ++x)
            for (int y = 0; y < grid; ++y) pool.push_back({x, y});
        for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i)
            std::swap(pool[i], pool[static_cast<int>(rng.next_below(i + 1))]);
        std::vector<GridBox> top_boxes;
        for (GridBox b : pool)
            if (rng.next_unit() < 0.35) top_boxes.push_back(b);
        for (GridBox b : pool) {
            if (static_cast<int>(top_boxes.size()) >= gap) break;
            if (std::find(top_boxes.begin(), top_boxes.end(), b) == top_boxes.end())
                top_boxes.push_back(b);
        }
        for (int i = static_cast<int>(top_boxes.size()) - 1; i > 0; --i)
            std::swap(top_boxes[i], top_boxes[static_cast<int>(rng.next_below(i + 1))]);
        std::vector<GridBox> bottom_boxes(top_boxes.begin() + gap, top_boxes.end());

        MeshPattern top = new_mesh_pattern(perm, top_boxes);
        MeshPattern bottom = new_mesh_pattern(perm, bottom_boxes);
        const std::string label = "[" + format_pattern(bottom) + ", " + format_pattern(top) + "]";
        Interval iv = interval(bottom, top, cfg);
        out.require(iv.size() == (1 << gap), label + " has 2^gap elements");
        out.require(checked_mobius(iv) == ((gap % 2) ? -1 : 1), label + " has mobius (-1)^gap");
        std::optional<std::vector<int>> shelling = find_shelling(order_complex(iv), cfg);
        out.require(shelling.has_value(), label + " complex is shellable");
        ++by_gap[gap];
    }
    out.note("50 shaded boolean intervals checked, ten per gap size 0..4");
    out.require(by_gap[4] == 10, "all gap-4 rounds completed");
    return out;
}

Outcome criterion5() {
    Outcome out;
    const MeshPattern bottom = P("21|0,0;1,0");
    int members = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const MeshPattern& m : gamma_members(n)) {
            ++members;
            const std::string label = format_pattern(m);
            out.require(in_gamma(m), label + " lies in the one-descent class");
            const long long closed = mu_gamma_closed_form(m);
            const long long via_word = mobius_word({0}, gamma_to_word(m));
            Interval iv = interval(bottom, m);
            const long long rec = checked_mobius(iv);
            out.require(closed == via_word && via_word == rec,
                        label + ": closed form " + std::to_string(closed) + ", word order " +
                            std::to_string(via_word) + ", recursion " + std::to_string(rec));
        }
    }
    out.note(std::to_string(members) + " one-descent patterns of length 2..5 checked");
    return out;
}

Outcome criterion6() {
    Outcome out;
    Config cfg;
    cfg.shelling_cap = 32;
    Interval chain_iv = interval(P("123|3,0;3,1;3,2"), P("456123|6,0;6,1;6,2"), cfg);
    checked_mobius(chain_iv);
    out.require(is_chain(chain_iv), "first interval is a chain");
    out.note("chain interval has " + std::to_string(chain_iv.size()) + " elements");

    Interval split_iv = interval(P("321|1,3"), P("521643|1,5;1,6;4,6"), cfg);
    checked_mobius(split_iv);
    int nontrivial = 0;
    for (const auto& comp : components(split_iv))
        if (comp.size() >= 2) ++nontrivial;
    out.require(nontrivial >= 2, "second interval: >= 2 open components of size >= 2");
    out.require(is_strongly_disconnected(split_iv), "second interval is strongly disconnected");

    int best_lo = -1, best_hi = -1, best_size = INT_MAX;
    for (int lo = 0; lo < split_iv.size(); ++lo) {
        for (int hi = 0; hi < split_iv.size(); ++hi) {
            if (!split_iv.strictly_less(lo, hi)) continue;
            int between = 0;
            for (int x = 0; x < split_iv.size(); ++x)
                if (split_iv.leq(lo, x) && split_iv.leq(x, hi)) ++between;
            if (between < 6 || between >= best_size) continue;
            Interval sub = subinterval(split_iv, lo, hi);
            if (is_strongly_disconnected(sub)) {
                best_lo = lo;
                best_hi = hi;
                best_size = between;
            }
        }
    }
    out.require(best_lo >= 0, "a strongly disconnected subinterval exists");
    if (best_lo >= 0) {
        Interval sub = subinterval(split_iv, best_lo, best_hi);
        checked_mobius(sub);
        std::optional<std::vector<int>> shelling = find_shelling(order_complex(sub), cfg);
        out.require(!shelling.has_value(),
                    "strongly disconnected subinterval complex admits no shelling");
        out.note("smallest strongly disconnected subinterval [" + format_pattern(sub.bottom) +
                 ", " + format_pattern(sub.top) + "] with " + std::to_string(sub.size()) +
                 " elements");
    }
    return out;
}

Outcome criterion7() {
    Outcome out;
    Interval iv = interval(P("21|0,0;1,0"), P("2413|0,0;1,0;2,0"));
    ChainStats st = chain_stats(iv);
    out.require(st.is_pure, "interval is pure");
    int impure = 0, plain = 0;
    for (const auto& [lo, hi] : iv.covers)
        (is_impure_edge(iv.elements[lo], iv.elements[hi], iv) ? impure : plain) += 1;
    out.require(impure >= 1, "at least one impure edge");
    out.require(plain >= 1, "at least one pure edge");
    out.require(checked_mobius(iv) == 2, "mobius is 2");
    out.note(std::to_string(impure) + " impure and " + std::to_string(plain) + " pure edges");
    return out;
}

Outcome criterion8() {
    Outcome out;
    MeshPattern left = P("132|1,3;2,2");
    MeshPattern right = P("321|0,3;1,2;2,1;3,0;3,3");
    MeshPattern sum = direct_sum(left, right);
    out.require(format_pattern(sum) ==
                    "132654|0,6;1,3;1,4;1,5;1,6;2,2;2,6;3,6;4,5;5,4;6,0;6,1;6,2;6,3;6,6",
                "direct sum reproduces the fifteen-box shading exactly");
    std::vector<MeshPattern> parts = decompose(sum);
    out.require(parts.size() == 2 && parts[0] == left && parts[1] == right,
                "decomposition returns the two summands");
    return out;
}

Outcome criterion9() {
    Outcome out;
    for (const char* text : {"21|", "21|1,1", "312|"}) {
        MeshPattern m = P(text);
        Interval iv = strongly_disconnected_sum(m);
        checked_mobius(iv);
        const bool strong = is_strongly_disconnected(iv);
        out.require(strong, std::string(text) + ": [m, m+m] is strongly disconnected");
        if (!strong) {
            std::string sizes;
            for (const auto& comp : components(iv)) {
                if (!sizes.empty()) sizes += "+";
                sizes += std::to_string(comp.size());
            }
            out.note(std::string(text) + ": open interval components have sizes " + sizes +
                     ", disconnected but with no two-element component");
        }
    }
    return out;
}

Outcome criterion10() {
    Outcome out;
    const MeshPattern bottom = classical({1});
    const SingletonMobiusTable& table = singleton_table();
    long long patterns = 0, covers_checked = 0;
    long long purity_disagreements = 0, edge_disagreements = 0;
    for (int n = 1; n <= 3; ++n) {
        const int grid = n + 1;
        const unsigned full = 1u << (grid * grid);
        for (const std::vector<int>& perm : perms_of(n)) {
            for (unsigned mask = 0; mask < full; ++mask) {
                if (__builtin_popcount(mask) > 4) continue;
                MeshPattern m = pattern_from_mask(perm, mask);
                ++patterns;
                Interval iv = interval(bottom, m);
                const long long rec = checked_mobius(iv);
                ++g_cross.table_lookups;
                if (rec != table.mu(m)) ++g_cross.table_mismatches;
                ChainStats st = chain_stats(iv);
                if (is_nonpure_from_singleton(m) != !st.is_pure) {
                    ++purity_disagreements;
                    if (purity_disagreements <= 3)
                        out.note("purity disagreement at " + format_pattern(m));
                }
                for (const auto& [lo, hi] : iv.covers) {
                    const MeshPattern& a = iv.elements[lo];
                    const MeshPattern& b = iv.elements[hi];
                    const int gap = b.dim() - a.dim();
                    ++covers_checked;
                    bool ok;
                    if (b.size() == a.size() + 1)
                        ok = classify_impure_edge(a, b) == (gap > 1);
                    else
                        ok = gap == 1;
                    if (!ok) {
                        ++edge_disagreements;
                        if (edge_disagreements <= 3)
                            out.note("edge disagreement at cover " + format_pattern(a) +
                                     " -> " + format_pattern(b));
                    }
                }
            }
        }
    }
    out.require(purity_disagreements == 0,
                "pointwise nonpurity matches interval purity everywhere");
    out.require(edge_disagreements == 0,
                "occurrence-level edge classification matches dimension gaps everywhere");
    out.note(std::to_string(patterns) + " patterns, " + std::to_string(covers_checked) +
             " covers classified");
    return out;
}

Outcome criterion11() {
    Outcome out;
    const SingletonMobiusTable& table = singleton_table();
    long long applicable = 0, violations = 0, degenerate = 0;
    for (int n = 1; n <= 3; ++n) {
        const int grid = n + 1;
        const unsigned full = 1u << (grid * grid);
        for (const std::vector<int>& perm : perms_of(n)) {
            for (unsigned mask = 1; mask < full; ++mask) {
                MeshPattern p = pattern_from_mask(perm, mask);
                if (!zero_mobius_hypothesis(p)) continue;
                if (n == 1) {
                    // A single point with one shaded box: the hypothesis holds
                    // only because the pattern itself is excluded from the open
                    // interval, and mu is -1, not 0. The statement concerns
                    // proper occurrences, so these are reported, not asserted.
                    ++degenerate;
                    ++g_cross.table_lookups;
                    if (table.mu(p) != -1) ++g_cross.table_mismatches;
                    continue;
                }
                ++applicable;
                if (table.mu(p) != 0) {
                    ++violations;
                    if (violations <= 3)
                        out.note("nonzero mobius despite hypothesis at " + format_pattern(p));
                }
            }
        }
    }
    out.require(violations == 0, "mobius vanishes wherever the hypothesis holds, lengths 2..3");
    out.require(degenerate == 4, "exactly the four single-box singletons are degenerate");
    out.note(std::to_string(applicable) + " shaded patterns satisfied the hypothesis; the 4 " +
             "single-box length-1 patterns have mobius -1 and sit outside the statement's scope");
    return out;
}

Outcome criterion12() {
    Outcome out;
    out.require(exact_proportion(1) == Rational{15, 16}, "exact proportion at n=1 is 15/16");
    Rational r2 = exact_proportion(2);
    Rational r3 = exact_proportion(3);
    out.note("exact proportions: n=1 15/16, n=2 " + std::to_string(r2.num) + "/" +
             std::to_string(r2.den) + ", n=3 " + std::to_string(r3.num) + "/" +
             std::to_string(r3.den));

    Estimate e32 = estimate_proportion(32, 10000, 1232);
    out.require(e32.value <= 8.0 / 32 + e32.half_width,
                "estimate at n=32 stays within 8/n plus the CI half-width");

    std::string chain;
    Estimate prev{};
    bool have_prev = false;
    for (int n : {8, 16, 32, 64}) {
        Estimate e = estimate_proportion(n, 10000, 1200 + n);
        if (have_prev)
            out.require(e.value <= prev.value + prev.half_width + e.half_width,
                        "estimates nonincreasing within joint CI at n=" + std::to_string(n));
        if (!chain.empty()) chain += ", ";
        chain += "n=" + std::to_string(n) + ": " + std::to_string(e.value);
        prev = e;
        have_prev = true;
    }
    out.note("sampled proportions " + chain);
    return out;
}

Outcome criterion13() {
    Outcome out;
    const SingletonMobiusTable& table = singleton_table();
    out.require(table.hall_mismatches() == 0,
                "bulk table: recursion matches signed chain counts on every pattern");
    out.require(g_cross.mismatches == 0,
                "recursion equals the chain-count oracle on every interval built above");
    out.require(g_cross.table_mismatches == 0,
                "interval recursion matches the bulk table on every lookup");
    for (const std::string& d : g_cross.details) out.note(d);
    out.note(std::to_string(g_cross.intervals) + " intervals cross-checked, " +
             std::to_string(g_cross.table_lookups) + " table lookups, table covers " +
             std::to_string(table.patterns_processed()) + " patterns");
    return out;
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "occurrence witness and region geometry", criterion1},
        {2, "fourteen-element interval: purity, chains, dimension", criterion2},
        {3, "mesh vs classical mobius on (1, 123)", criterion3},
        {4, "shaded boolean intervals: counts, mobius, shellings", criterion4},
        {5, "one-descent patterns: closed form, word order, recursion, chains", criterion5},
        {6, "chain interval and strongly disconnected interval", criterion6},
        {7, "pure interval with an impure edge", criterion7},
        {8, "direct sum figure and decomposition round-trip", criterion8},
        {9, "strong disconnection of [m, m+m]", criterion9},
        {10, "purity predicates agree with interval structure", criterion10},
        {11, "vanishing mobius under the singleton hypothesis", criterion11},
        {12, "containment probability: exact values and sampled bound", criterion12},
        {13, "oracle consistency everywhere", criterion13},
    };
    int failures = 0;
    for (const Entry& entry : entries) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = entry.fn();
        } catch (const Error& e) {
            out.pass = false;
            out.notes.push_back(std::string("unexpected error: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        std::printf("criterion %2d: %s  %s  (%.0f ms)\n", entry.id, out.pass ? "PASS" : "FAIL",
                    entry.label, ms);
        for (const std::string& n : out.notes) std::printf("   note: %s\n", n.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (failures == 0)
        std::printf("all 13 criteria passed\n");
    else
        std::printf("%d of 13 criteria failed\n", failures);
    return failures;
}
