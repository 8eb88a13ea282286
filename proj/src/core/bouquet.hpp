#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/edge_set.hpp"
#include "core/ribbon_graph.hpp"
#include "core/signed_graph.hpp"

namespace petrial {

// A bouquet: one-vertex ribbon graph, stored as its single rotation, i.e. a
// framed chord diagram. Labels are arbitrary (auxiliary bouquets keep the
// labels of the edges that survive contraction); parsed diagrams use 1..m.
class Bouquet {
public:
    Bouquet() = default; // empty bouquet
    explicit Bouquet(std::vector<HalfEnd> sequence);

    // Chord-diagram text: signed integers on one line, e.g. "1 2 -1 2".
    static Bouquet parse(const std::string& text);
    std::string serialize() const;

    static Bouquet from_graph(const RibbonGraph& g); // throws NotBouquetError
    RibbonGraph to_graph() const;

    const std::vector<HalfEnd>& sequence() const { return seq_; }
    int loop_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<unsigned>& loop_labels() const { return labels_; }
    bool has_loop(unsigned label) const;
    bool twisted(unsigned label) const;
    EdgeSet twisted_loops() const;
    // Positions of a label's two ends in the stored linearization, ascending.
    std::pair<int, int> positions(unsigned label) const;

    int euler_genus() const { return to_graph().euler_genus(); }
    int boundary_components() const { return to_graph().boundary_components(); }

    Bouquet partial_petrial(EdgeSet a) const { return from_graph(to_graph().partial_petrial(a)); }

    bool operator==(const Bouquet& other) const { return seq_ == other.seq_; }

private:
    std::vector<HalfEnd> seq_;
    std::vector<unsigned> labels_;           // sorted
    std::vector<std::pair<int, int>> pos_;   // aligned with labels_
    void index_loops();
};

// Intersection graph I(B): one vertex per loop (named by its label), an edge
// where the two loops interlace, every sign +.
SignedGraph intersection_graph(const Bouquet& b);

// SI(B): as I(B) but with sign - on twisted loops.
SignedGraph signed_intersection_graph(const Bouquet& b);

// Euler genus as the GF(2) rank of adj(SI(B)).
int genus_via_rank(const Bouquet& b);

// One-point join: concatenates the rotations, relabelling b2 past b1's labels.
Bouquet join(const Bouquet& b1, const Bouquet& b2);

} // namespace petrial
