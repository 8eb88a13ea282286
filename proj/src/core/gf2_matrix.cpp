#include "core/gf2_matrix.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace petrial {

namespace {

// Forward elimination on single-word rows.
int rank_packed64(std::uint64_t* rows, int n) {
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        int p = r;
        while (p < n && !(rows[p] & bit)) ++p;
        if (p == n) continue;
        std::swap(rows[r], rows[p]);
        const std::uint64_t pivot = rows[r];
        for (int i = r + 1; i < n; ++i) {
            if (rows[i] & bit) rows[i] ^= pivot;
        }
        ++r;
    }
    return r;
}

} // namespace

Gf2Matrix::Gf2Matrix(int n) : n_(n), words_((n + 63) / 64), rows_(static_cast<size_t>(n) * words_, 0) {
    if (n < 0) throw std::invalid_argument("matrix size must be non-negative");
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool Gf2Matrix::get(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return (rows_[static_cast<size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
}

void Gf2Matrix::set(int i, int j, bool v) {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    std::uint64_t& w = rows_[static_cast<size_t>(i) * words_ + j / 64];
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    if (v)
        w |= bit;
    else
        w &= ~bit;
}

void Gf2Matrix::flip(int i, int j) {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    rows_[static_cast<size_t>(i) * words_ + j / 64] ^= std::uint64_t{1} << (j % 64);
}

void Gf2Matrix::flip_diagonal(std::uint64_t mask) {
    if (n_ > 64) throw std::invalid_argument("diagonal masks require n <= 64");
    for (int i = 0; i < n_; ++i) {
        if ((mask >> i) & 1u) flip(i, i);
    }
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

Gf2Matrix Gf2Matrix::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Gf2Matrix p(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (get(i, j)) p.set(perm[i], perm[j], true);
    return p;
}

int Gf2Matrix::rank() const {
    return rank_with_diagonal(0);
}

int Gf2Matrix::rank_with_diagonal(std::uint64_t mask) const {
    if (n_ == 0) return 0;
    if (words_ == 1) {
        std::array<std::uint64_t, 64> rows;
        for (int i = 0; i < n_; ++i) rows[i] = rows_[i];
        std::uint64_t d = mask;
        while (d) {
            const int i = std::countr_zero(d);
            rows[i] ^= std::uint64_t{1} << i;
            d &= d - 1;
        }
        return rank_packed64(rows.data(), n_);
    }

    if (mask != 0) throw std::invalid_argument("diagonal masks require n <= 64");
    std::vector<std::uint64_t> rows = rows_;
    int r = 0;
    for (int c = 0; c < n_ && r < n_; ++c) {
        const int w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        int p = r;
        while (p < n_ && !(rows[static_cast<size_t>(p) * words_ + w] & bit)) ++p;
        if (p == n_) continue;
        for (int k = 0; k < words_; ++k)
            std::swap(rows[static_cast<size_t>(r) * words_ + k], rows[static_cast<size_t>(p) * words_ + k]);
        for (int i = r + 1; i < n_; ++i) {
            if (rows[static_cast<size_t>(i) * words_ + w] & bit) {
                for (int k = 0; k < words_; ++k)
                    rows[static_cast<size_t>(i) * words_ + k] ^= rows[static_cast<size_t>(r) * words_ + k];
            }
        }
        ++r;
    }
    return r;
}

} // namespace petrial
