#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "meshpat/errors.hpp"

namespace meshpat {

// A cell of the (n+1) x (n+1) grid that surrounds a permutation of length n.
// Box (x, y) sits between positions x and x+1 and between values y and y+1,
// so coordinates run from 0 to n.
struct GridBox {
    int x = 0;
    int y = 0;

    auto operator<=>(const GridBox&) const = default;
};

// Set of shaded boxes on a fixed (n+1) x (n+1) grid, packed as a bitset.
class Shading {
public:
    Shading() : grid_(1), words_(1, 0) {}
    explicit Shading(int pattern_len);

    int grid() const { return grid_; }           // boxes per side, = pattern length + 1
    int pattern_len() const { return grid_ - 1; }

    bool test(int x, int y) const {
        check_box(x, y);
        int i = index(x, y);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool test(GridBox b) const { return test(b.x, b.y); }

    void set(int x, int y, bool on = true);
    void set(GridBox b, bool on = true) { set(b.x, b.y, on); }

    int count() const;
    bool empty() const { return count() == 0; }
    bool full() const { return count() == grid_ * grid_; }

    std::vector<GridBox> boxes() const; // sorted by (x, y)

    // True if every box in the rectangle [x0, x1) x [y0, y1) is shaded.
    bool rect_all_shaded(int x0, int x1, int y0, int y1) const;

    bool operator==(const Shading& other) const = default;
    std::strong_ordering operator<=>(const Shading& other) const;

private:
    int index(int x, int y) const { return x * grid_ + y; }
    void check_box(int x, int y) const {
        if (x < 0 || y < 0 || x >= grid_ || y >= grid_)
            fail(Errc::box_out_of_grid, "box (" + std::to_string(x) + "," + std::to_string(y) +
                                            ") outside grid of size " + std::to_string(grid_));
    }

    int grid_;
    std::vector<std::uint64_t> words_;
};

// A mesh pattern: a permutation (values 1..n, stored one-based) together with
// a shading of the surrounding grid. The empty pattern (n = 0) has one box.
struct MeshPattern {
    std::vector<int> perm;
    Shading shading;

    int size() const { return static_cast<int>(perm.size()); }
    // Rank in the containment order: letters plus shaded boxes.
    int dim() const { return size() + shading.count(); }

    bool operator==(const MeshPattern& other) const = default;
    // Orders by (length, shading count, permutation, shading); used for
    // canonical element ordering inside intervals.
    std::strong_ordering operator<=>(const MeshPattern& other) const;
};

// Validates that perm is a permutation of 1..n and every box fits the grid.
MeshPattern new_mesh_pattern(const std::vector<int>& perm, const std::vector<GridBox>& boxes);

// Classical pattern: no shaded boxes.
MeshPattern classical(const std::vector<int>& perm);

// Removes one shaded box; the box must currently be shaded.
MeshPattern deshade(const MeshPattern& m, GridBox b);

bool is_fully_shaded(const MeshPattern& m);

// Vertical flip (value complement): value v maps to n+1-v in place, box (x, y)
// to (x, n-y). Satisfies flip(skew_sum(s,t)) == direct_sum(flip(s), flip(t)).
MeshPattern flip(const MeshPattern& m);

// Flattening (pattern of a word of distinct integers): values mapped to 1..k
// preserving relative order.
std::vector<int> flatten(const std::vector<int>& values);

// One-based positions i with perm[i] > perm[i+1].
std::vector<int> descents(const std::vector<int>& perm);

// One-based positions i >= 2 whose value is adjacent (+-1) to the value at
// i-1. Used by the closed-form Mobius rule for the Gamma family.
std::vector<int> adjacency_tail_positions(const std::vector<int>& perm);

// Count of adjacency tails.
int adjacency_tails(const std::vector<int>& perm);

// True for patterns with exactly one descent, descent bottom 1, and shading
// exactly the boxes (a, 0) with a < pos(1).
bool in_gamma(const MeshPattern& m);

struct Rng;
// Uniform random permutation of 1..n with each box shaded independently with
// probability q.
MeshPattern random_mesh_pattern(int n, double q, Rng& rng);
MeshPattern random_mesh_pattern(int n, double q, std::uint64_t seed);

// Deterministic splittable RNG; value stream is stable across platforms.
struct Rng {
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64();
    // Uniform on [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound);
    // Uniform on [0, 1) with 53 random bits.
    double next_unit();

    std::uint64_t state;
};

// Stream-splitting helper: derives an independent seed for sample `index`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace meshpat
