#pragma once

#include <cstdint>
#include <vector>

namespace petrial {

// Square bit matrix over GF(2), rows packed into 64-bit words.
// Rank computation sits inside 2^m subset sweeps, so the n <= 64 case
// (one word per row) has a dedicated stack-allocated elimination path.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(int n);
    static Gf2Matrix identity(int n);

    int size() const { return n_; }
    bool get(int i, int j) const;
    void set(int i, int j, bool v);
    void flip(int i, int j);

    // XORs the diagonal with the given mask (bit i -> entry (i,i)); n <= 64 only.
    void flip_diagonal(std::uint64_t mask);

    Gf2Matrix transposed() const;

    // Simultaneous row/column permutation: entry (i,j) moves to (perm[i], perm[j]).
    Gf2Matrix permuted(const std::vector<int>& perm) const;

    int rank() const;

    // rank(*this + D_mask) without mutating; fast path for n <= 64.
    int rank_with_diagonal(std::uint64_t mask) const;

    bool operator==(const Gf2Matrix& other) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_; // row-major, words_ words per row
};

} // namespace petrial
