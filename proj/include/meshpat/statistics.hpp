#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meshpat/pattern.hpp"

namespace meshpat {

struct Rational {
    long long num = 0;
    long long den = 1;
    bool operator==(const Rational&) const = default;
};

// True iff p contains one of the four singleton patterns whose lone shaded
// box is a corner of the singleton grid: 1^{(0,0)}, 1^{(1,0)}, 1^{(0,1)},
// 1^{(1,1)}.
bool contains_forbidden_singleton(const MeshPattern& p);

// True iff no shaded singleton lies strictly between the unshaded singleton
// and p; when it holds and |p| >= 2 with sh(p) nonempty, mu(1^empty, p) = 0.
bool zero_mobius_hypothesis(const MeshPattern& p);

// Exact fraction of the n! * 2^((n+1)^2) mesh patterns of length n that
// contain a forbidden singleton, by full enumeration. Only n in {1,2,3}.
Rational exact_proportion(int n);

struct Estimate {
    double value = 0;      // sampled proportion
    double half_width = 0; // 95% Wilson confidence half-width
    long long samples = 0;
    std::uint64_t seed = 0;
    bool operator==(const Estimate&) const = default;
};

// Monte-Carlo estimate of the probability that a random mesh pattern of
// length n (uniform permutation, each box shaded independently with
// probability 1/2) contains a forbidden singleton.
Estimate estimate_proportion(int n, long long samples, std::uint64_t seed);

// Monte-Carlo estimate of the probability that a random mesh pattern of
// length n contains m. Exact without sampling when the answer is forced:
// the unshaded singleton or empty pattern (always contained), the shaded
// empty pattern (never contained in anything larger), or |m| > n.
Estimate estimate_pattern_containment(const MeshPattern& m, int n, long long samples,
                                      std::uint64_t seed, double q = 0.5);

// Tab-separated report with columns n, samples, value, half_width,
// bound_8_over_n, one row per requested length.
std::string proportion_report(const std::vector<int>& lengths, long long samples,
                              std::uint64_t seed);

} // namespace meshpat
