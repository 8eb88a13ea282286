#include "core/bouquet.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace petrial {

Bouquet::Bouquet(std::vector<HalfEnd> sequence) : seq_(std::move(sequence)) { index_loops(); }

void Bouquet::index_loops() {
    std::map<unsigned, std::vector<int>> occ;
    for (int p = 0; p < static_cast<int>(seq_.size()); ++p) {
        const HalfEnd& h = seq_[p];
        if (h.label == 0 || h.label > kMaxEdgeLabel)
            throw std::invalid_argument("edge labels must lie in 1..64");
        if (h.sign != 1 && h.sign != -1) throw std::invalid_argument("signs must be +1 or -1");
        occ[h.label].push_back(p);
    }
    labels_.clear();
    pos_.clear();
    for (const auto& [label, ps] : occ) {
        if (ps.size() != 2)
            throw std::invalid_argument("label " + std::to_string(label) + " appears " +
                                        std::to_string(ps.size()) + " times; each chord needs exactly two ends");
        labels_.push_back(label);
        pos_.emplace_back(ps[0], ps[1]);
    }
}

Bouquet Bouquet::parse(const std::string& text) {
    std::vector<HalfEnd> seq;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            char* endp = nullptr;
            const long v = std::strtol(tok.c_str(), &endp, 10);
            if (endp == tok.c_str() || *endp != '\0')
                throw ParseError(line_no, "'" + tok + "' is not an integer");
            if (v == 0) throw ParseError(line_no, "0 is not a valid chord label");
            const unsigned label = static_cast<unsigned>(v < 0 ? -v : v);
            if (label > kMaxEdgeLabel)
                throw ParseError(line_no, "chord labels are limited to " + std::to_string(kMaxEdgeLabel));
            seq.push_back(HalfEnd{label, v < 0 ? -1 : 1});
        }
    }
    std::map<unsigned, int> count;
    for (const HalfEnd& h : seq) ++count[h.label];
    const unsigned m = static_cast<unsigned>(count.size());
    for (const auto& [label, n] : count) {
        if (label > m)
            throw ParseError(1, "labels must cover 1.." + std::to_string(m) + ": label " +
                                    std::to_string(label) + " is out of range");
        if (n != 2)
            throw ParseError(1, "label " + std::to_string(label) + " appears " + std::to_string(n) +
                                    " times, expected exactly 2");
    }
    return Bouquet(std::move(seq));
}

std::string Bouquet::serialize() const {
    std::string out;
    for (const HalfEnd& h : seq_) {
        if (!out.empty()) out += ' ';
        if (h.sign < 0) out += '-';
        out += std::to_string(h.label);
    }
    return out;
}

Bouquet Bouquet::from_graph(const RibbonGraph& g) {
    if (!g.is_bouquet()) throw NotBouquetError("a bouquet (single-vertex ribbon graph) is required");
    return Bouquet(g.rotations()[0]);
}

RibbonGraph Bouquet::to_graph() const { return RibbonGraph({seq_}); }

bool Bouquet::has_loop(unsigned label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool Bouquet::twisted(unsigned label) const {
    const auto [p, q] = positions(label);
    return seq_[p].sign != seq_[q].sign;
}

EdgeSet Bouquet::twisted_loops() const {
    EdgeSet s = 0;
    for (unsigned l : labels_)
        if (twisted(l)) s |= edge_bit(l);
    return s;
}

std::pair<int, int> Bouquet::positions(unsigned label) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw std::invalid_argument("chord " + std::to_string(label) + " not present");
    return pos_[it - labels_.begin()];
}

SignedGraph intersection_graph(const Bouquet& b) {
    const auto& labels = b.loop_labels();
    SignedGraph g(labels, std::vector<int>(labels.size(), 1));
    for (size_t i = 0; i < labels.size(); ++i) {
        const auto [p1, p2] = b.positions(labels[i]);
        for (size_t j = i + 1; j < labels.size(); ++j) {
            const auto [q1, q2] = b.positions(labels[j]);
            // interlaced <=> exactly one of q1,q2 lies between p1 and p2
            const bool in1 = p1 < q1 && q1 < p2;
            const bool in2 = p1 < q2 && q2 < p2;
            if (in1 != in2) g.set_edge(labels[i], labels[j], true);
        }
    }
    return g;
}

SignedGraph signed_intersection_graph(const Bouquet& b) {
    SignedGraph g = intersection_graph(b);
    for (unsigned l : b.loop_labels())
        if (b.twisted(l)) g.set_sign(l, -1);
    return g;
}

int genus_via_rank(const Bouquet& b) { return adjacency_gf2(signed_intersection_graph(b)).rank(); }

Bouquet join(const Bouquet& b1, const Bouquet& b2) {
    unsigned offset = 0;
    for (unsigned l : b1.loop_labels()) offset = std::max(offset, l);
    std::vector<HalfEnd> seq = b1.sequence();
    for (HalfEnd h : b2.sequence()) {
        if (h.label + offset > kMaxEdgeLabel)
            throw std::invalid_argument("join would exceed the 64-label limit");
        h.label += offset;
        seq.push_back(h);
    }
    return Bouquet(std::move(seq));
}

} // namespace petrial
