#pragma once

#include <bit>
#include <cstdint>

namespace petrial {

// Set of edge labels (1-based), stored as a bitmask: bit (label-1) <=> label present.
// Label 64 is the highest supported anywhere in the library.
using EdgeSet = std::uint64_t;

inline constexpr unsigned kMaxEdgeLabel = 64;

constexpr EdgeSet edge_bit(unsigned label) { return EdgeSet{1} << (label - 1); }

constexpr bool edge_in(EdgeSet s, unsigned label) { return (s >> (label - 1)) & 1u; }

constexpr int edge_set_size(EdgeSet s) { return std::popcount(s); }

// Lowest label of a non-empty set.
constexpr unsigned edge_set_min(EdgeSet s) { return static_cast<unsigned>(std::countr_zero(s)) + 1; }

template <typename F>
void for_each_edge(EdgeSet s, F&& f) {
    while (s) {
        f(edge_set_min(s));
        s &= s - 1;
    }
}

} // namespace petrial
