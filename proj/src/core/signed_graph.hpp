#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/gf2_matrix.hpp"

namespace petrial {

// A simple graph with a +/- sign on each vertex. Vertices are named by
// unsigned labels so that intersection graphs can keep the loop labels of the
// bouquet they came from; standalone graphs use 1..n. At most 64 vertices.
class SignedGraph {
public:
    SignedGraph() = default;
    // Vertices labelled 1..n, all signs +, no edges.
    explicit SignedGraph(int n);
    SignedGraph(std::vector<unsigned> labels, std::vector<int> signs);

    // Text format:
    //   signs: + - +
    //   edges: 1-2, 2-3
    // with an optional "labels: ..." line when vertex names are not 1..n.
    static SignedGraph parse(const std::string& text);
    std::string serialize() const;

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<unsigned>& labels() const { return labels_; }
    bool has_vertex(unsigned label) const;
    int index_of(unsigned label) const; // throws if unknown

    int sign(unsigned label) const;
    void set_sign(unsigned label, int s);
    // Bit per vertex index: 1 where the sign is -.
    std::uint64_t negative_mask() const;

    bool has_edge(unsigned a, unsigned b) const;
    void set_edge(unsigned a, unsigned b, bool present);
    void toggle_edge(unsigned a, unsigned b);
    int edge_count() const;
    // Neighbour bits of vertex index i.
    std::uint64_t row(int i) const { return adj_[i]; }

    bool operator==(const SignedGraph& other) const = default;

private:
    std::vector<unsigned> labels_;     // sorted
    std::vector<int> signs_;           // +1 / -1, aligned with labels_
    std::vector<std::uint64_t> adj_;   // symmetric bitset rows, zero diagonal
};

// Adjacency matrix over GF(2): off-diagonal 1 iff edge, diagonal 1 iff sign -.
// Rows/columns follow the sorted label order.
Gf2Matrix adjacency_gf2(const SignedGraph& s);

// Rebuilds a signed graph from a symmetric GF(2) matrix: diagonal bits become
// - signs, off-diagonal bits become edges. Labels are supplied by the caller.
SignedGraph signed_graph_from_matrix(const Gf2Matrix& m, const std::vector<unsigned>& labels);

} // namespace petrial
