#include "meshpat/word_poset.hpp"

#include <cstddef>

namespace meshpat {

bool subword_contains(const Word& u, const Word& w) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < w.size() && i < u.size(); ++j)
        if (w[j] == u[i]) ++i;
    return i == u.size();
}

long long normal_embeddings(const Word& u, const Word& w) {
    const int lu = static_cast<int>(u.size());
    const int lw = static_cast<int>(w.size());
    // dp[i] = embeddings of the first i letters of u into the prefix of w
    // processed so far that cover every repeat position seen so far. A repeat
    // position (same letter as its left neighbour) must lie in the support of
    // a normal embedding, so skipping it kills the count.
    std::vector<long long> dp(static_cast<std::size_t>(lu) + 1, 0);
    dp[0] = 1;
    for (int j = 1; j <= lw; ++j) {
        const bool must_use = j >= 2 && w[j - 1] == w[j - 2];
        for (int i = lu; i >= 0; --i) {
            long long take = 0;
            if (i >= 1 && u[i - 1] == w[j - 1]) take = dp[i - 1];
            dp[i] = must_use ? take : dp[i] + take;
        }
    }
    return dp[lu];
}

long long mobius_word(const Word& u, const Word& w) {
    if (!subword_contains(u, w)) fail(Errc::not_contained, "u is not a subword of w");
    const long long count = normal_embeddings(u, w);
    return (w.size() - u.size()) % 2 == 0 ? count : -count;
}

namespace {

int position_of_one(const MeshPattern& m) {
    for (int i = 0; i < m.size(); ++i)
        if (m.perm[i] == 1) return i + 1;
    return 0;
}

} // namespace

Word gamma_to_word(const MeshPattern& m) {
    if (!in_gamma(m)) fail(Errc::not_in_gamma, "pattern is not in the Gamma family");
    const int n = m.size();
    const int pos1 = position_of_one(m);
    std::vector<char> before(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < pos1 - 1; ++i) before[m.perm[i]] = 1;
    // Letter for value i is 0 when i sits before the 1; the leading letter
    // (for value 1 itself) is always 1 and is dropped.
    Word f;
    f.reserve(static_cast<std::size_t>(n) - 1);
    for (int v = 2; v <= n; ++v) f.push_back(before[v] ? 0 : 1);
    return f;
}

MeshPattern word_to_gamma(const Word& w) {
    for (int letter : w)
        if (letter != 0 && letter != 1)
            fail(Errc::parse_error, "word letters must be 0 or 1");
    // Rebuild the full word by prepending the implicit leading 1 for value 1.
    Word full;
    full.reserve(w.size() + 1);
    full.push_back(1);
    full.insert(full.end(), w.begin(), w.end());
    const int n = static_cast<int>(full.size());
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        if (full[v - 1] == 0) perm.push_back(v);
    const int pos1 = static_cast<int>(perm.size()) + 1;
    if (pos1 == 1) fail(Errc::no_zero, "word has no zero letter");
    for (int v = 1; v <= n; ++v)
        if (full[v - 1] == 1) perm.push_back(v);
    std::vector<GridBox> boxes;
    boxes.reserve(static_cast<std::size_t>(pos1));
    for (int a = 0; a < pos1; ++a) boxes.push_back({a, 0});
    return new_mesh_pattern(perm, boxes);
}

long long mu_gamma_closed_form(const MeshPattern& m) {
    if (!in_gamma(m)) fail(Errc::not_in_gamma, "pattern is not in the Gamma family");
    const int n = m.size();
    const int pos1 = position_of_one(m);
    // Adjacent equal letters of the word force its positions into every
    // normal embedding. A forced 0 pins the single letter of the bottom word
    // there; a forced 1 can never be matched. Tails at pos(1) or pos(1)+1
    // involve value 1's dropped leading letter and do not constrain.
    int blocking = 0;
    int forced = 0;
    for (int p : adjacency_tail_positions(m.perm)) {
        if (p > pos1 + 1) ++blocking;
        else if (p < pos1) ++forced;
    }
    long long magnitude = 0;
    if (blocking == 0 && forced <= 1) magnitude = forced == 1 ? 1 : pos1 - 1;
    return n % 2 == 0 ? magnitude : -magnitude;
}

} // namespace meshpat
