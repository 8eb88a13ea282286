#include "core/ribbon_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace petrial {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

RibbonGraph::RibbonGraph() : rot_(1) {}

RibbonGraph::RibbonGraph(std::vector<std::vector<HalfEnd>> rotations) : rot_(std::move(rotations)) {
    if (rot_.empty()) throw std::invalid_argument("a ribbon graph needs at least one vertex");
    index_edges();
}

void RibbonGraph::index_edges() {
    std::map<unsigned, std::vector<End>> ends;
    for (int v = 0; v < static_cast<int>(rot_.size()); ++v) {
        for (int p = 0; p < static_cast<int>(rot_[v].size()); ++p) {
            const HalfEnd& h = rot_[v][p];
            if (h.label == 0 || h.label > kMaxEdgeLabel)
                throw std::invalid_argument("edge labels must lie in 1..64");
            if (h.sign != 1 && h.sign != -1) throw std::invalid_argument("signs must be +1 or -1");
            ends[h.label].push_back(End{v, p});
        }
    }
    labels_.clear();
    ends_.clear();
    for (const auto& [label, occ] : ends) {
        if (occ.size() != 2)
            throw std::invalid_argument("label " + std::to_string(label) + " appears " +
                                        std::to_string(occ.size()) + " times; each edge needs exactly two ends");
        labels_.push_back(label);
        ends_.push_back({occ[0], occ[1]});
    }
}

int RibbonGraph::label_rank(unsigned label) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

EdgeSet RibbonGraph::edge_labels() const {
    EdgeSet s = 0;
    for (unsigned l : labels_) s |= edge_bit(l);
    return s;
}

bool RibbonGraph::has_edge(unsigned label) const {
    return label >= 1 && label <= kMaxEdgeLabel && label_rank(label) >= 0;
}

bool RibbonGraph::edge_twisted(unsigned label) const {
    const int r = label_rank(label);
    if (r < 0) throw std::invalid_argument("edge " + std::to_string(label) + " not present");
    const auto& e = ends_[r];
    return rot_[e[0].vertex][e[0].pos].sign != rot_[e[1].vertex][e[1].pos].sign;
}

EdgeSet RibbonGraph::twisted_edges() const {
    EdgeSet s = 0;
    for (unsigned l : labels_)
        if (edge_twisted(l)) s |= edge_bit(l);
    return s;
}

std::pair<int, int> RibbonGraph::edge_endpoints(unsigned label) const {
    const int r = label_rank(label);
    if (r < 0) throw std::invalid_argument("edge " + std::to_string(label) + " not present");
    return {ends_[r][0].vertex, ends_[r][1].vertex};
}

int RibbonGraph::connected_components() const {
    DisjointSet ds(vertex_count());
    for (const auto& e : ends_) ds.unite(e[0].vertex, e[1].vertex);
    int c = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (ds.find(v) == v) ++c;
    return c;
}

int RibbonGraph::boundary_components() const {
    BoundaryTracer tracer(*this);
    BoundaryTracer::Scratch scratch;
    return tracer.face_count(tracer.base_twist_by_index(), scratch);
}

int RibbonGraph::euler_genus() const {
    const int chi = vertex_count() - edge_count() + boundary_components();
    return 2 * connected_components() - chi;
}

RibbonGraph RibbonGraph::partial_petrial(EdgeSet a) const {
    std::vector<std::vector<HalfEnd>> rot = rot_;
    for_each_edge(a, [&](unsigned label) {
        const int r = label_rank(label);
        if (r < 0) throw std::invalid_argument("edge " + std::to_string(label) + " not present");
        const End& second = ends_[r][1];
        rot[second.vertex][second.pos].sign = -rot[second.vertex][second.pos].sign;
    });
    return RibbonGraph(std::move(rot));
}

// ---------------------------------------------------------------------------
// Text format

namespace {

void trim(std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
}

} // namespace

RibbonGraph RibbonGraph::parse(const std::string& text) {
    std::vector<std::vector<HalfEnd>> rots;
    std::vector<int> record_line;
    std::map<unsigned, int> count;
    std::map<unsigned, int> first_line;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string chunk;
        std::istringstream chunks(line);
        while (std::getline(chunks, chunk, '/')) {
            trim(chunk);
            if (chunk.empty()) continue;
            std::istringstream tokens(chunk);
            std::string head;
            tokens >> head;
            const unsigned expected = static_cast<unsigned>(rots.size()) + 1;
            if (head != "v" + std::to_string(expected) + ":")
                throw ParseError(line_no, "expected record 'v" + std::to_string(expected) +
                                              ":', got '" + head + "'");
            std::vector<HalfEnd> rot;
            std::string tok;
            while (tokens >> tok) {
                char* endp = nullptr;
                const long v = std::strtol(tok.c_str(), &endp, 10);
                if (endp == tok.c_str() || *endp != '\0')
                    throw ParseError(line_no, "'" + tok + "' is not an integer");
                if (v == 0) throw ParseError(line_no, "0 is not a valid half-edge label");
                const unsigned label = static_cast<unsigned>(v < 0 ? -v : v);
                if (label > kMaxEdgeLabel)
                    throw ParseError(line_no, "edge labels are limited to " + std::to_string(kMaxEdgeLabel));
                rot.push_back(HalfEnd{label, v < 0 ? -1 : 1});
                ++count[label];
                first_line.emplace(label, line_no);
            }
            rots.push_back(std::move(rot));
            record_line.push_back(line_no);
        }
    }

    if (rots.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no vertex records found");

    const unsigned m = static_cast<unsigned>(count.size());
    for (const auto& [label, n] : count) {
        if (label > m)
            throw ParseError(first_line[label], "labels must cover 1.." + std::to_string(m) +
                                                    ": label " + std::to_string(label) + " is out of range");
        if (n != 2)
            throw ParseError(first_line[label], "label " + std::to_string(label) + " appears " +
                                                    std::to_string(n) + " times, expected exactly 2");
    }
    for (size_t v = 0; v < rots.size(); ++v) {
        if (rots[v].empty() && !(rots.size() == 1 && m == 0))
            throw ParseError(record_line[v],
                             "empty rotation is only valid for the single-vertex empty graph");
    }
    return RibbonGraph(std::move(rots));
}

std::string RibbonGraph::serialize() const {
    std::string out;
    for (size_t v = 0; v < rot_.size(); ++v) {
        out += "v" + std::to_string(v + 1) + ":";
        for (const HalfEnd& h : rot_[v]) {
            out += ' ';
            if (h.sign < 0) out += '-';
            out += std::to_string(h.label);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Boundary tracing

BoundaryTracer::BoundaryTracer(const RibbonGraph& g)
    : m_(g.edge_count()), verts_(g.vertex_count()), comp_(g.connected_components()), labels_(g.labels_) {
    // End ids follow scan order; flags 2*end (first corner) and 2*end+1 (second).
    std::vector<int> end_id_at;
    int next = 0;
    corner_.assign(static_cast<size_t>(4) * m_, -1);
    std::vector<std::vector<int>> ids(verts_);
    for (int v = 0; v < verts_; ++v) {
        const auto& rot = g.rot_[v];
        if (rot.empty()) ++isolated_;
        ids[v].resize(rot.size());
        for (size_t p = 0; p < rot.size(); ++p) ids[v][p] = next++;
        const int k = static_cast<int>(rot.size());
        for (int p = 0; p < k; ++p) {
            const int cur = ids[v][p];
            const int nxt = ids[v][(p + 1) % k];
            corner_[2 * cur + 1] = 2 * nxt;
            corner_[2 * nxt] = 2 * cur + 1;
        }
    }
    end_occ_.resize(m_);
    for (int r = 0; r < m_; ++r) {
        const auto& e = g.ends_[r];
        end_occ_[r] = {ids[e[0].vertex][e[0].pos], ids[e[1].vertex][e[1].pos]};
        if (g.rot_[e[0].vertex][e[0].pos].sign != g.rot_[e[1].vertex][e[1].pos].sign)
            base_twist_ |= EdgeSet{1} << r;
    }
}

EdgeSet BoundaryTracer::label_mask_to_index_mask(EdgeSet labels) const {
    EdgeSet out = 0;
    for (int r = 0; r < m_; ++r)
        if (edge_in(labels, labels_[r])) out |= EdgeSet{1} << r;
    return out;
}

int BoundaryTracer::face_count(EdgeSet twisted, Scratch& scratch) const {
    const int flags = 4 * m_;
    auto& band = scratch.band;
    auto& seen = scratch.seen;
    band.resize(flags);
    seen.assign(flags, 0);

    for (int r = 0; r < m_; ++r) {
        const int p = end_occ_[r][0], q = end_occ_[r][1];
        if ((twisted >> r) & 1u) {
            band[2 * p] = 2 * q;
            band[2 * q] = 2 * p;
            band[2 * p + 1] = 2 * q + 1;
            band[2 * q + 1] = 2 * p + 1;
        } else {
            band[2 * p] = 2 * q + 1;
            band[2 * q + 1] = 2 * p;
            band[2 * p + 1] = 2 * q;
            band[2 * q] = 2 * p + 1;
        }
    }

    int faces = isolated_;
    for (int f = 0; f < flags; ++f) {
        if (seen[f]) continue;
        ++faces;
        int cur = f;
        do {
            seen[cur] = 1;
            const int across = band[cur];
            seen[across] = 1;
            cur = corner_[across];
        } while (cur != f);
    }
    return faces;
}

int BoundaryTracer::euler_genus(EdgeSet twisted, Scratch& scratch) const {
    const int chi = verts_ - m_ + face_count(twisted, scratch);
    return 2 * comp_ - chi;
}

} // namespace petrial
