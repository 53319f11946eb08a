#pragma once

#include <vector>

#include "meshpat/pattern.hpp"

namespace meshpat {

// A word under subword order; letters are small non-negative integers.
using Word = std::vector<int>;

// True iff u is a (not necessarily contiguous) subword of w.
bool subword_contains(const Word& u, const Word& w);

// Number of embeddings of u in w that include every non-initial letter of
// every maximal run of equal letters in w.
long long normal_embeddings(const Word& u, const Word& w);

// Mobius function of [u, w] in subword order: the signed normal-embedding
// count. Requires subword_contains(u, w).
long long mobius_word(const Word& u, const Word& w);

// The word f(m) attached to a Gamma pattern: letter i of the full word is 0
// when the value i appears before 1 in the permutation, 1 otherwise, and the
// leading letter (always 1) is dropped.
Word gamma_to_word(const MeshPattern& m);

// Inverse construction: prepend a 1, place the 0 positions in increasing
// order, then 1 positions in increasing order, and shade south-west of the
// point 1. Requires at least one 0.
MeshPattern word_to_gamma(const Word& w);

// Mobius of [21 with its two south-west boxes, m] for m in Gamma, evaluated
// by the closed case analysis of adjacency tails (no interval is built).
long long mu_gamma_closed_form(const MeshPattern& m);

} // namespace meshpat
