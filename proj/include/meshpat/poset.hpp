#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "meshpat/containment.hpp"
#include "meshpat/pattern.hpp"

namespace meshpat {

// Resource caps for interval enumeration and shelling search. Enumeration is
// exponential in the worst case; hitting a cap raises budget_exceeded rather
// than exhausting memory.
struct Config {
    long long budget = 2'000'000;          // candidate emissions in patterns_below
    int max_len = 7;                       // longest admissible interval top
    int shelling_cap = 8;                  // facet count accepted by find_shelling
    long long shelling_budget = 4'000'000; // search nodes in find_shelling
    bool paper_shelling = false;           // literal text convention, see find_shelling
};

// A closed interval [bottom, top] of the containment order. Elements are
// deduplicated, sorted by (length, shading size, perm, shading), and addressed
// by index; covers and the strict-order bitsets use those indices.
struct Interval {
    MeshPattern bottom;
    MeshPattern top;
    std::vector<MeshPattern> elements;
    int bottom_index = 0;
    int top_index = 0;
    std::vector<std::pair<int, int>> covers; // (lower, upper), lexicographic
    std::vector<std::vector<std::uint64_t>> less; // less[i] bit j <=> elements[i] < elements[j]

    int size() const { return static_cast<int>(elements.size()); }
    bool strictly_less(int i, int j) const { return (less[i][j >> 6] >> (j & 63)) & 1; }
    bool leq(int i, int j) const { return i == j || strictly_less(i, j); }
    // Upper covers of element i, derived from the stored cover list.
    std::vector<int> upper_covers(int i) const;
};

// All q with |q| >= min_len and q <= p, found by expanding every classical
// occurrence of every subsequence pattern into its maximal induced shading
// subsets. Deduplicated and sorted canonically.
std::vector<MeshPattern> patterns_below(const MeshPattern& p, int min_len,
                                        const Config& cfg = {});

// The closed interval [m, p]. Requires contains(m, p), else not_comparable.
Interval interval(const MeshPattern& m, const MeshPattern& p, const Config& cfg = {});

// Restriction of a built interval to [elements[lo], elements[hi]]; both must
// be comparable in iv. Reuses the stored order instead of re-enumerating.
Interval subinterval(const Interval& iv, int lo, int hi);

// Mobius function by the recursive definition, evaluated bottom-up over the
// interval. The two-pattern form returns 0 when m is not contained in p.
long long mobius(const MeshPattern& m, const MeshPattern& p, const Config& cfg = {});
long long mobius(const Interval& iv);
// mu(bottom, x) for every element x, indexed like iv.elements.
std::vector<long long> mobius_all(const Interval& iv);

// Independent cross-check: the signed count of chains bottom = c0 < ... < ck
// = top, summed as Sum_k (-1)^k N_k. Computed per chain length in unsigned
// 128-bit arithmetic; overflow raises budget_exceeded.
long long mobius_via_chains(const Interval& iv);
long long mobius_via_chains(const MeshPattern& m, const MeshPattern& p, const Config& cfg = {});

// Histogram of maximal chain lengths (edge counts) from bottom to top.
struct ChainStats {
    std::map<int, long long> lengths;
    int dimension = 0;
    bool is_pure = true;
};
ChainStats chain_stats(const Interval& iv);

// The closed-form rank bound |m| + |sh(m)| for the interval [1^empty, m].
// Reported as-is; chain_stats supplies the measured chain length, and the two
// are compared (not reconciled) by callers that care.
int interval_dimension_bottom(const MeshPattern& m);

// An edge of the cover DAG is impure when the endpoint dimensions differ by
// more than 1. (a, b) must be a cover of iv, else not_a_cover.
bool is_impure_edge(const MeshPattern& a, const MeshPattern& b, const Interval& iv);

// Occurrence-level test for the same property, no interval needed: every
// occurrence of a in b uses all shaded boxes of b and deletes a point whose
// removal merges shadings. Requires contains(a, b) and |b| = |a| + 1.
bool classify_impure_edge(const MeshPattern& a, const MeshPattern& b);

// proper_subset_rule on the predicates below selects the reading of "another
// occurrence using a subset of the boxes the deletion uses": strict subset
// when true (the reading consistent with the worked nonpure examples),
// inclusive otherwise.

// Whether [1^empty, m] is non-pure, decided pointwise: some deletable point
// merges shadings and no alternative occurrence of the deleted pattern uses a
// (strict) subset of the boxes the deletion occurrence uses.
bool is_nonpure_from_singleton(const MeshPattern& m, bool proper_subset_rule = true);

// The smallest deletable point certifying nonpurity, if one exists.
std::optional<int> nonpure_witness(const MeshPattern& m, bool proper_subset_rule = true);

// Whether [m, p] has at least one impure edge, by the pointwise rule applied
// to deletions of p that stay above m. Requires contains(m, p).
bool has_impure_edge(const MeshPattern& m, const MeshPattern& p,
                     bool proper_subset_rule = true);

// Connected components of the comparability graph of the OPEN interval,
// as sorted element-index lists, largest component first.
std::vector<std::vector<int>> components(const Interval& iv);

// At least two components of size >= 2 in the open interval.
bool is_strongly_disconnected(const Interval& iv);
// At least two components in the open interval.
bool is_disconnected(const Interval& iv);
// The closed interval is totally ordered.
bool is_chain(const Interval& iv);

// Facets (maximal chains) of the open interval, each sorted by index.
struct OrderComplex {
    std::vector<int> vertices;              // element indices of the open interval
    std::vector<std::vector<int>> facets;
};
OrderComplex order_complex(const Interval& iv);

// Searches for a shelling order of the facets; returns facet indices in
// shelling order, or nullopt when no order exists. A complex whose facets
// split into two or more components each containing an edge is rejected
// immediately (such complexes are never shellable). Facet counts above
// cfg.shelling_cap raise budget_exceeded, as does an exhausted search budget.
// With cfg.paper_shelling the attachment condition requires the intersection
// to be pure of the facet's own dimension (instead of one lower), which no
// two distinct facets can satisfy.
std::optional<std::vector<int>> find_shelling(const OrderComplex& complex,
                                              const Config& cfg = {});

// The interval [m, m (+) m]. Requires m indecomposable, dim(m) > 1 and both
// diagonal corners unshaded, else precondition_failed. No connectivity claim
// is made here; callers test is_strongly_disconnected themselves.
Interval strongly_disconnected_sum(const MeshPattern& m, const Config& cfg = {});

// Bulk table of mu(1^empty, p) for every mesh pattern p with 1 <= |p| <= 3,
// built in one dimension-graded sweep with zeta transforms over shading
// masks, together with per-length chain counts from the bottom. The chain
// route is the independent check: hall_mismatches counts patterns where
// Sum_k (-1)^k N_k differs from the recursive mu (expected 0).
class SingletonMobiusTable {
public:
    SingletonMobiusTable();

    // mu(1^empty, p); |p| must be 1, 2 or 3.
    long long mu(const MeshPattern& p) const;
    long long patterns_processed() const { return processed_; }
    long long hall_mismatches() const { return hall_mismatches_; }

private:
    friend struct TableBuilder;
    // mu values per permutation, indexed by shading bitmask (x * grid + y).
    std::vector<std::vector<long long>> mu_;
    std::vector<std::vector<int>> perms_;
    long long processed_ = 0;
    long long hall_mismatches_ = 0;
};

} // namespace meshpat
