#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/edge_set.hpp"

namespace petrial {

// One attachment of an edge-ribbon to a vertex-disc: the edge label together
// with the sign it carries in the signed rotation system.
struct HalfEnd {
    unsigned label = 0;
    int sign = 1; // +1 or -1
    bool operator==(const HalfEnd&) const = default;
};

// A ribbon graph as a signed rotation system: one cyclic sequence of signed
// half-edge ends per vertex. An edge is twisted iff its two ends carry
// opposite signs. Values are immutable after construction; every operation
// returns a new graph, so they are safe to share across threads.
//
// Parsed graphs carry labels 1..m; graphs produced by edge contraction keep
// the surviving original labels, which may be sparse.
class RibbonGraph {
public:
    RibbonGraph(); // single-vertex empty graph
    explicit RibbonGraph(std::vector<std::vector<HalfEnd>> rotations);

    // Rotation-system text: one record per vertex, "v<k>: s1 s2 ... sj",
    // records separated by newlines or '/'; '#' starts a comment. Labels must
    // cover 1..m exactly twice; a plain integer means sign +, a negative one
    // means sign -.
    static RibbonGraph parse(const std::string& text);
    std::string serialize() const;

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int edge_count() const { return static_cast<int>(labels_.size()); }
    bool is_bouquet() const { return rot_.size() == 1; }
    const std::vector<std::vector<HalfEnd>>& rotations() const { return rot_; }

    EdgeSet edge_labels() const;
    bool has_edge(unsigned label) const;
    bool edge_twisted(unsigned label) const;
    EdgeSet twisted_edges() const;
    // Sorted list of the labels present.
    const std::vector<unsigned>& sorted_labels() const { return labels_; }
    // Endpoint vertex indices of an edge (equal for a loop).
    std::pair<int, int> edge_endpoints(unsigned label) const;

    int connected_components() const;
    int boundary_components() const;
    int euler_genus() const;

    // Twists every edge in `a`: flips the sign of the later end in scan order
    // (vertex order, then position). Involutive. Throws if a label is absent.
    RibbonGraph partial_petrial(EdgeSet a) const;

    bool operator==(const RibbonGraph& other) const { return rot_ == other.rot_; }

private:
    struct End {
        int vertex;
        int pos;
    };

    std::vector<std::vector<HalfEnd>> rot_;
    std::vector<unsigned> labels_;          // sorted distinct labels
    std::vector<std::array<End, 2>> ends_;  // per label rank: both ends in scan order

    int label_rank(unsigned label) const; // -1 if absent
    void index_edges();

    friend class BoundaryTracer;
};

// Flag structure of a rotation system, reused across many boundary traversals
// of graphs that share the rotation and differ only in which edges are
// twisted. Boundary components are the alternating corner/ribbon-side cycles
// on 4m flags (two per half-edge end: the end-segment corner hit first when
// walking the vertex-disc boundary in rotation order, and the one hit
// second). An untwisted ribbon joins first<->second across its two ends, a
// twisted ribbon joins first<->first and second<->second; the orbit count
// does not depend on this naming.
class BoundaryTracer {
public:
    struct Scratch {
        std::vector<int> band;
        std::vector<std::uint8_t> seen;
    };

    explicit BoundaryTracer(const RibbonGraph& g);

    int edge_count() const { return m_; }
    int vertex_count() const { return verts_; }
    int components() const { return comp_; }

    // Twist assignment by edge index = position of the label in sorted order.
    EdgeSet base_twist_by_index() const { return base_twist_; }
    EdgeSet label_mask_to_index_mask(EdgeSet labels) const;

    int face_count(EdgeSet twisted_by_index, Scratch& scratch) const;
    int euler_genus(EdgeSet twisted_by_index, Scratch& scratch) const;

private:
    int m_ = 0;
    int verts_ = 0;
    int comp_ = 0;
    int isolated_ = 0;
    EdgeSet base_twist_ = 0;
    std::vector<unsigned> labels_;
    std::vector<int> corner_;                  // flag -> corner mate
    std::vector<std::array<int, 2>> end_occ_;  // per edge index: its two end ids
};

} // namespace petrial
