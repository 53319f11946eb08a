#include "meshpat/statistics.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "meshpat/containment.hpp"
#include "meshpat/errors.hpp"

namespace meshpat {

namespace {

// Checks the occurrence at position a (1-based) against the corner-shaded
// singleton whose box is (i, j): the corresponding quadrant of boxes must be
// fully shaded and its interior must hold no other point.
bool corner_at(const MeshPattern& p, int a, int i, int j) {
    const int n = p.size();
    const int v = p.perm[a - 1];
    const int x0 = i == 0 ? 0 : a;
    const int x1 = i == 0 ? a : n + 1;
    const int y0 = j == 0 ? 0 : v;
    const int y1 = j == 0 ? v : n + 1;
    if (!p.shading.rect_all_shaded(x0, x1, y0, y1)) return false;
    const int blo = i == 0 ? 1 : a + 1;
    const int bhi = i == 0 ? a - 1 : n;
    const int vlo = j == 0 ? 1 : v + 1;
    const int vhi = j == 0 ? v - 1 : n;
    for (int b = blo; b <= bhi; ++b) {
        const int w = p.perm[b - 1];
        if (w >= vlo && w <= vhi) return false;
    }
    return true;
}

} // namespace

bool contains_forbidden_singleton(const MeshPattern& p) {
    for (int a = 1; a <= p.size(); ++a)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (corner_at(p, a, i, j)) return true;
    return false;
}

bool zero_mobius_hypothesis(const MeshPattern& p) {
    if (p.size() == 0) fail(Errc::empty_pattern, "no singleton lies below the empty pattern");
    if (p.size() >= 2) return !contains_forbidden_singleton(p);
    // Length one: the shaded singletons below p are exactly the single-box
    // patterns over boxes shaded in p, and one of them is strictly below iff
    // p shades two or more boxes.
    return p.shading.count() <= 1;
}

Rational exact_proportion(int n) {
    if (n < 1 || n > 3) fail(Errc::too_large, "exact enumeration is limited to lengths 1 to 3");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    const int bits = (n + 1) * (n + 1);
    long long hits = 0;
    long long total = 0;
    do {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            MeshPattern p{perm, Shading(n)};
            for (int b = 0; b < bits; ++b)
                if (mask >> b & 1) p.shading.set({b / (n + 1), b % (n + 1)});
            ++total;
            if (contains_forbidden_singleton(p)) ++hits;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    const long long g = std::gcd(hits, total);
    return {hits / g, total / g};
}

namespace {

Estimate wilson(long long hits, long long samples, std::uint64_t seed) {
    const double z = 1.959964;
    const double ns = static_cast<double>(samples);
    const double ph = static_cast<double>(hits) / ns;
    const double z2 = z * z;
    const double half =
        z * std::sqrt(ph * (1 - ph) / ns + z2 / (4 * ns * ns)) / (1 + z2 / ns);
    return {ph, half, samples, seed};
}

} // namespace

Estimate estimate_proportion(int n, long long samples, std::uint64_t seed) {
    if (n < 1) fail(Errc::precondition_failed, "length must be positive");
    if (samples < 1) fail(Errc::precondition_failed, "need at least one sample");
    long long hits = 0;
    for (long long i = 0; i < samples; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        MeshPattern p = random_mesh_pattern(n, 0.5, rng);
        if (contains_forbidden_singleton(p)) ++hits;
    }
    return wilson(hits, samples, seed);
}

Estimate estimate_pattern_containment(const MeshPattern& m, int n, long long samples,
                                      std::uint64_t seed, double q) {
    if (n < 0) fail(Errc::precondition_failed, "length must be nonnegative");
    if (samples < 1) fail(Errc::precondition_failed, "need at least one sample");
    if (m.size() > n) return {0.0, 0.0, samples, seed};
    if (m.size() == 0 && n >= 1)
        return {m.shading.empty() ? 1.0 : 0.0, 0.0, samples, seed};
    if (m.size() == 1 && m.shading.empty()) return {1.0, 0.0, samples, seed};
    long long hits = 0;
    for (long long i = 0; i < samples; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        MeshPattern p = random_mesh_pattern(n, q, rng);
        if (contains(m, p)) ++hits;
    }
    return wilson(hits, samples, seed);
}

std::string proportion_report(const std::vector<int>& lengths, long long samples,
                              std::uint64_t seed) {
    std::string out = "n\tsamples\tvalue\thalf_width\tbound_8_over_n\n";
    char buf[160];
    for (int n : lengths) {
        Estimate e = estimate_proportion(n, samples, seed);
        std::snprintf(buf, sizeof buf, "%d\t%lld\t%.6f\t%.6f\t%.6f\n", n, e.samples, e.value,
                      e.half_width, 8.0 / n);
        out += buf;
    }
    return out;
}

} // namespace meshpat
