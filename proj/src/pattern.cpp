#include "meshpat/pattern.hpp"

#include <algorithm>
#include <bit>

namespace meshpat {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::not_a_permutation: return "not_a_permutation";
    case Errc::box_out_of_grid: return "box_out_of_grid";
    case Errc::box_not_shaded: return "box_not_shaded";
    case Errc::empty_pattern: return "empty_pattern";
    case Errc::corner_shaded: return "corner_shaded";
    case Errc::not_in_gamma: return "not_in_gamma";
    case Errc::no_zero: return "no_zero";
    case Errc::not_contained: return "not_contained";
    case Errc::not_comparable: return "not_comparable";
    case Errc::not_a_cover: return "not_a_cover";
    case Errc::not_an_occurrence: return "not_an_occurrence";
    case Errc::invalid_occurrence: return "invalid_occurrence";
    case Errc::precondition_failed: return "precondition_failed";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::too_large: return "too_large";
    case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

Shading::Shading(int pattern_len) : grid_(pattern_len + 1) {
    if (pattern_len < 0) fail(Errc::too_large, "negative pattern length");
    words_.assign((static_cast<std::size_t>(grid_) * grid_ + 63) / 64, 0);
}

void Shading::set(int x, int y, bool on) {
    check_box(x, y);
    int i = index(x, y);
    if (on)
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

int Shading::count() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::vector<GridBox> Shading::boxes() const {
    std::vector<GridBox> out;
    for (int x = 0; x < grid_; ++x)
        for (int y = 0; y < grid_; ++y)
            if (test(x, y)) out.push_back({x, y});
    return out;
}

bool Shading::rect_all_shaded(int x0, int x1, int y0, int y1) const {
    for (int x = x0; x < x1; ++x)
        for (int y = y0; y < y1; ++y)
            if (!test(x, y)) return false;
    return true;
}

std::strong_ordering Shading::operator<=>(const Shading& other) const {
    if (auto c = grid_ <=> other.grid_; c != 0) return c;
    if (auto c = count() <=> other.count(); c != 0) return c;
    return boxes() <=> other.boxes();
}

std::strong_ordering MeshPattern::operator<=>(const MeshPattern& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    if (auto c = shading.count() <=> other.shading.count(); c != 0) return c;
    if (auto c = perm <=> other.perm; c != 0) return c;
    return shading <=> other.shading;
}

MeshPattern new_mesh_pattern(const std::vector<int>& perm, const std::vector<GridBox>& boxes) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v])
            fail(Errc::not_a_permutation, "values must be a permutation of 1.." + std::to_string(n));
        seen[v] = true;
    }
    MeshPattern m{perm, Shading(n)};
    for (GridBox b : boxes) {
        if (m.shading.test(b))
            fail(Errc::parse_error,
                 "duplicate box (" + std::to_string(b.x) + "," + std::to_string(b.y) + ")");
        m.shading.set(b);
    }
    return m;
}

MeshPattern classical(const std::vector<int>& perm) { return new_mesh_pattern(perm, {}); }

MeshPattern deshade(const MeshPattern& m, GridBox b) {
    if (!m.shading.test(b))
        fail(Errc::box_not_shaded,
             "box (" + std::to_string(b.x) + "," + std::to_string(b.y) + ") is not shaded");
    MeshPattern out = m;
    out.shading.set(b, false);
    return out;
}

bool is_fully_shaded(const MeshPattern& m) { return m.shading.full(); }

MeshPattern flip(const MeshPattern& m) {
    int n = m.size();
    MeshPattern out{std::vector<int>(m.perm.size()), Shading(n)};
    for (int i = 0; i < n; ++i) out.perm[i] = n + 1 - m.perm[i];
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= n; ++y)
            if (m.shading.test(x, y)) out.shading.set(x, n - y);
    return out;
}

std::vector<int> flatten(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), values[i]);
        out[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return out;
}

std::vector<int> descents(const std::vector<int>& perm) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
        if (perm[i] > perm[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<int> adjacency_tail_positions(const std::vector<int>& perm) {
    std::vector<int> out;
    for (std::size_t i = 1; i < perm.size(); ++i)
        if (perm[i] == perm[i - 1] + 1 || perm[i] == perm[i - 1] - 1)
            out.push_back(static_cast<int>(i) + 1);
    return out;
}

int adjacency_tails(const std::vector<int>& perm) {
    return static_cast<int>(adjacency_tail_positions(perm).size());
}

bool in_gamma(const MeshPattern& m) {
    int n = m.size();
    if (n == 0) return false;
    int pos1 = 0;
    for (int i = 0; i < n; ++i)
        if (m.perm[i] == 1) pos1 = i + 1;
    // The descent bottom must be the value 1, so 1 cannot open the pattern.
    if (pos1 < 2) return false;
    // Values before 1 ascend and values from 1 on ascend, leaving exactly the
    // one descent into 1.
    for (int i = 1; i < pos1 - 1; ++i)
        if (m.perm[i] < m.perm[i - 1]) return false;
    for (int i = pos1; i + 1 < n; ++i)
        if (m.perm[i + 1] < m.perm[i]) return false;
    // Shading is exactly the boxes (a, 0) for a < pos(1).
    if (m.shading.count() != pos1) return false;
    for (int a = 0; a < pos1; ++a)
        if (!m.shading.test(a, 0)) return false;
    return true;
}

static std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next_u64() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps the draw unbiased.
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
}

double Rng::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ (index * 0xd2b74407b1ce6e93ULL + 1));
}

MeshPattern random_mesh_pattern(int n, double q, Rng& rng) {
    if (n < 0) fail(Errc::too_large, "negative length");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    // Fisher-Yates with the portable draw.
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    MeshPattern m{perm, Shading(n)};
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= n; ++y)
            if (rng.next_unit() < q) m.shading.set(x, y);
    return m;
}

MeshPattern random_mesh_pattern(int n, double q, std::uint64_t seed) {
    Rng rng(seed);
    return random_mesh_pattern(n, q, rng);
}

} // namespace meshpat
