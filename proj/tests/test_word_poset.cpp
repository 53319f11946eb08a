#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "meshpat/containment.hpp"
#include "meshpat/errors.hpp"
#include "meshpat/poset.hpp"
#include "meshpat/text.hpp"
#include "meshpat/word_poset.hpp"
#include "naive_oracle.hpp"

using namespace meshpat;

namespace {

MeshPattern P(const std::string& text) { return parse_pattern(text); }

const MeshPattern kBottom = parse_pattern("21|0,0;1,0");

// All Gamma patterns of length n: pick the nonempty set of values placed
// before the 1, ascending, then 1, then the rest ascending, with the
// south-west boxes shaded.
std::vector<MeshPattern> all_gamma(int n) {
    std::vector<MeshPattern> out;
    if (n < 2) return out;
    const int choices = n - 1; // values 2..n
    for (int mask = 1; mask < (1 << choices); ++mask) {
        std::vector<int> perm;
        for (int v = 2; v <= n; ++v)
            if (mask & (1 << (v - 2))) perm.push_back(v);
        const int pos1 = static_cast<int>(perm.size()) + 1;
        perm.push_back(1);
        for (int v = 2; v <= n; ++v)
            if (!(mask & (1 << (v - 2)))) perm.push_back(v);
        std::vector<GridBox> boxes;
        for (int a = 0; a < pos1; ++a) boxes.push_back({a, 0});
        out.push_back(new_mesh_pattern(perm, boxes));
    }
    return out;
}

std::vector<Word> all_words(int len) {
    std::vector<Word> out;
    for (int mask = 0; mask < (1 << len); ++mask) {
        Word w(len);
        for (int i = 0; i < len; ++i) w[i] = (mask >> i) & 1;
        out.push_back(w);
    }
    return out;
}

} // namespace

TEST_CASE("subword_contains") {
    CHECK(subword_contains({0}, {0, 0, 1}));
    CHECK_FALSE(subword_contains({1, 1}, {0, 0, 1}));
    CHECK(subword_contains({0, 1}, {0, 0, 1}));
    CHECK(subword_contains({}, {1, 1}));
    CHECK_FALSE(subword_contains({0}, {}));
    CHECK(subword_contains({0, 1, 0}, {0, 1, 0}));
}

TEST_CASE("normal_embeddings worked values") {
    CHECK(normal_embeddings({0}, {0, 0, 1}) == 1);
    CHECK(normal_embeddings({0, 1, 1}, {0, 1, 1}) == 1);
    CHECK(normal_embeddings({0}, {0, 1, 0}) == 2);
    // Both letters of the run "11" are non-initial-or-first, so the required
    // positions exceed a single-letter embedding: count 0.
    CHECK(normal_embeddings({0}, {0, 0, 1, 1}) == 0);
    CHECK(normal_embeddings({}, {}) == 1);
}

TEST_CASE("normal_embeddings matches the exhaustive filter") {
    Rng rng(83);
    for (int round = 0; round < 400; ++round) {
        const int wn = static_cast<int>(rng.next_below(11));
        Word w(wn), u;
        for (int& x : w) x = static_cast<int>(rng.next_below(2));
        const int un = static_cast<int>(rng.next_below(wn + 1));
        for (int i = 0; i < un; ++i) u.push_back(static_cast<int>(rng.next_below(2)));
        CHECK(normal_embeddings(u, w) == oracle::naive_normal_embeddings(u, w));
    }
}

TEST_CASE("mobius_word") {
    CHECK(mobius_word({0}, {0, 0, 1}) == 1);
    CHECK(mobius_word({1, 0, 1}, {1, 0, 1}) == 1);
    CHECK(mobius_word({0}, {0, 0, 1, 1}) == 0);
    CHECK(oracle::naive_word_mobius({0}, {0, 0, 1, 1}) == 0);
    bool threw = false;
    try {
        mobius_word({1, 1}, {0, 0, 1});
    } catch (const Error& e) {
        threw = e.code() == Errc::not_contained;
    }
    CHECK(threw);
}

TEST_CASE("mobius_word equals the interval recursion") {
    for (int len = 0; len <= 6; ++len)
        for (const Word& w : all_words(len))
            for (const Word& u : oracle::naive_subwords(w))
                CHECK(mobius_word(u, w) == oracle::naive_word_mobius(u, w));

    Rng rng(89);
    for (int round = 0; round < 40; ++round) {
        Word w(8);
        for (int& x : w) x = static_cast<int>(rng.next_below(2));
        auto subs = oracle::naive_subwords(w);
        std::vector<Word> pool(subs.begin(), subs.end());
        const Word& u = pool[rng.next_below(pool.size())];
        CHECK(mobius_word(u, w) == oracle::naive_word_mobius(u, w));
    }
}

TEST_CASE("gamma_to_word") {
    CHECK(gamma_to_word(P("2314|0,0;1,0;2,0")) == Word{0, 0, 1});
    CHECK(gamma_to_word(kBottom) == Word{0});
    CHECK(gamma_to_word(P("35124|0,0;1,0;2,0")) == Word{1, 0, 1, 0});
    CHECK_THROWS_AS(gamma_to_word(P("12|")), Error);

    for (int n = 2; n <= 6; ++n)
        for (const MeshPattern& m : all_gamma(n)) {
            REQUIRE(in_gamma(m));
            Word w = gamma_to_word(m);
            CHECK(static_cast<int>(w.size()) == n - 1);
            CHECK(std::count(w.begin(), w.end(), 0) >= 1);
        }
}

TEST_CASE("word_to_gamma") {
    CHECK(word_to_gamma({0, 0, 1}) == P("2314|0,0;1,0;2,0"));
    CHECK(word_to_gamma({0}) == kBottom);
    CHECK_THROWS_AS(word_to_gamma({1, 1, 1}), Error);
    bool threw = false;
    try {
        word_to_gamma({});
    } catch (const Error& e) {
        threw = e.code() == Errc::no_zero;
    }
    CHECK(threw);
}

TEST_CASE("gamma word bijection round-trips") {
    for (int n = 2; n <= 6; ++n)
        for (const MeshPattern& m : all_gamma(n)) CHECK(word_to_gamma(gamma_to_word(m)) == m);
    for (int len = 1; len <= 5; ++len)
        for (const Word& w : all_words(len)) {
            if (std::count(w.begin(), w.end(), 0) == 0) continue;
            MeshPattern m = word_to_gamma(w);
            CHECK(in_gamma(m));
            CHECK(gamma_to_word(m) == w);
        }
}

TEST_CASE("the bijection preserves order") {
    std::vector<MeshPattern> gamma;
    for (int n = 2; n <= 5; ++n) {
        auto layer = all_gamma(n);
        gamma.insert(gamma.end(), layer.begin(), layer.end());
    }
    int comparable = 0;
    for (const MeshPattern& a : gamma)
        for (const MeshPattern& b : gamma)
            if (contains(a, b)) {
                ++comparable;
                CHECK(subword_contains(gamma_to_word(a), gamma_to_word(b)));
            }
    CHECK(comparable > 50);
}

TEST_CASE("closed form mobius on Gamma") {
    CHECK(mu_gamma_closed_form(P("2314|0,0;1,0;2,0")) == 1);
    CHECK(mu_gamma_closed_form(P("2413|0,0;1,0;2,0")) == 2);
    CHECK(mu_gamma_closed_form(kBottom) == 1);
    // One adjacency tail immediately after the point 1: the magnitude keeps
    // the no-tail value pos(1)-1 = 2.
    CHECK(mu_gamma_closed_form(P("35124|0,0;1,0;2,0")) == -2);
    CHECK_THROWS_AS(mu_gamma_closed_form(P("12|")), Error);
}

TEST_CASE("closed form agrees with the word oracle") {
    for (int n = 2; n <= 7; ++n)
        for (const MeshPattern& m : all_gamma(n))
            CHECK(mu_gamma_closed_form(m) == mobius_word({0}, gamma_to_word(m)));
}

TEST_CASE("closed form agrees with the interval engine") {
    for (int n = 2; n <= 4; ++n)
        for (const MeshPattern& m : all_gamma(n))
            CHECK(mu_gamma_closed_form(m) == mobius(kBottom, m));
}

TEST_CASE("no-adjacency patterns use exactly the even values") {
    for (int n = 2; n <= 5; ++n)
        for (const MeshPattern& m : all_gamma(n)) {
            if (adjacency_tails(m.perm) != 0) continue;
            const int pos1 =
                static_cast<int>(std::find(m.perm.begin(), m.perm.end(), 1) - m.perm.begin()) + 1;
            for (int i = 0; i < pos1 - 1; ++i) CHECK(m.perm[i] == 2 * (i + 1));
        }
}
