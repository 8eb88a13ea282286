#include "core/signed_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace petrial {

namespace {
constexpr int kMaxVertices = 64;
}

SignedGraph::SignedGraph(int n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count must lie in 0..64");
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), 1u);
    signs_.assign(n, 1);
    adj_.assign(n, 0);
}

SignedGraph::SignedGraph(std::vector<unsigned> labels, std::vector<int> signs)
    : labels_(std::move(labels)), signs_(std::move(signs)) {
    if (labels_.size() != signs_.size()) throw std::invalid_argument("labels/signs size mismatch");
    if (labels_.size() > kMaxVertices) throw std::invalid_argument("at most 64 vertices supported");
    if (!std::is_sorted(labels_.begin(), labels_.end()) ||
        std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw std::invalid_argument("vertex labels must be strictly increasing");
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    adj_.assign(labels_.size(), 0);
}

bool SignedGraph::has_vertex(unsigned label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

int SignedGraph::index_of(unsigned label) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw std::invalid_argument("unknown vertex " + std::to_string(label));
    return static_cast<int>(it - labels_.begin());
}

int SignedGraph::sign(unsigned label) const { return signs_[index_of(label)]; }

void SignedGraph::set_sign(unsigned label, int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    signs_[index_of(label)] = s;
}

std::uint64_t SignedGraph::negative_mask() const {
    std::uint64_t m = 0;
    for (size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] < 0) m |= std::uint64_t{1} << i;
    return m;
}

bool SignedGraph::has_edge(unsigned a, unsigned b) const {
    const int i = index_of(a), j = index_of(b);
    return (adj_[i] >> j) & 1u;
}

void SignedGraph::set_edge(unsigned a, unsigned b, bool present) {
    const int i = index_of(a), j = index_of(b);
    if (i == j) throw std::invalid_argument("loops are not allowed in a simple graph");
    const std::uint64_t bi = std::uint64_t{1} << i, bj = std::uint64_t{1} << j;
    if (present) {
        adj_[i] |= bj;
        adj_[j] |= bi;
    } else {
        adj_[i] &= ~bj;
        adj_[j] &= ~bi;
    }
}

void SignedGraph::toggle_edge(unsigned a, unsigned b) { set_edge(a, b, !has_edge(a, b)); }

int SignedGraph::edge_count() const {
    int twice = 0;
    for (std::uint64_t r : adj_) twice += std::popcount(r);
    return twice / 2;
}

Gf2Matrix adjacency_gf2(const SignedGraph& s) {
    const int n = s.vertex_count();
    Gf2Matrix m(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t r = s.row(i);
        while (r) {
            const int j = std::countr_zero(r);
            m.set(i, j, true);
            r &= r - 1;
        }
        if (s.sign(s.labels()[i]) < 0) m.set(i, i, true);
    }
    return m;
}

SignedGraph signed_graph_from_matrix(const Gf2Matrix& m, const std::vector<unsigned>& labels) {
    const int n = m.size();
    if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("label count mismatch");
    std::vector<int> signs(n, 1);
    for (int i = 0; i < n; ++i)
        if (m.get(i, i)) signs[i] = -1;
    SignedGraph s(labels, signs);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (m.get(i, j) != m.get(j, i)) throw std::invalid_argument("matrix is not symmetric");
            if (m.get(i, j)) s.set_edge(labels[i], labels[j], true);
        }
    return s;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string trim_copy(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
}

unsigned parse_unsigned(const std::string& tok, int line) {
    char* endp = nullptr;
    const long v = std::strtol(tok.c_str(), &endp, 10);
    if (endp == tok.c_str() || *endp != '\0' || v <= 0)
        throw ParseError(line, "'" + tok + "' is not a positive integer");
    return static_cast<unsigned>(v);
}

} // namespace

SignedGraph SignedGraph::parse(const std::string& text) {
    std::vector<int> signs;
    std::vector<unsigned> labels;
    std::vector<std::pair<unsigned, unsigned>> edges;
    bool have_signs = false, have_edges = false;
    int signs_line = 0;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim_copy(line);
        if (line.empty()) continue;

        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "expected 'signs:', 'edges:' or 'labels:'");
        const std::string key = trim_copy(line.substr(0, colon));
        const std::string rest = trim_copy(line.substr(colon + 1));

        if (key == "signs") {
            if (have_signs) throw ParseError(line_no, "duplicate signs line");
            have_signs = true;
            signs_line = line_no;
            std::istringstream toks(rest);
            std::string t;
            while (toks >> t) {
                if (t == "+")
                    signs.push_back(1);
                else if (t == "-")
                    signs.push_back(-1);
                else
                    throw ParseError(line_no, "signs must be '+' or '-', got '" + t + "'");
            }
        } else if (key == "labels") {
            std::istringstream toks(rest);
            std::string t;
            while (toks >> t) labels.push_back(parse_unsigned(t, line_no));
        } else if (key == "edges") {
            if (have_edges) throw ParseError(line_no, "duplicate edges line");
            have_edges = true;
            std::istringstream items(rest);
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim_copy(item);
                if (item.empty()) continue;
                const auto dash = item.find('-');
                if (dash == std::string::npos || dash == 0 || dash + 1 >= item.size())
                    throw ParseError(line_no, "edge '" + item + "' must look like 'a-b'");
                const unsigned a = parse_unsigned(trim_copy(item.substr(0, dash)), line_no);
                const unsigned b = parse_unsigned(trim_copy(item.substr(dash + 1)), line_no);
                edges.emplace_back(a, b);
            }
        } else {
            throw ParseError(line_no, "unknown section '" + key + "'");
        }
    }

    if (!have_signs) throw ParseError(line_no == 0 ? 1 : line_no, "missing signs line");
    if (labels.empty()) {
        labels.resize(signs.size());
        std::iota(labels.begin(), labels.end(), 1u);
    }
    if (labels.size() != signs.size())
        throw ParseError(signs_line, "labels/signs counts differ");

    SignedGraph g(std::move(labels), std::move(signs));
    for (const auto& [a, b] : edges) {
        if (!g.has_vertex(a) || !g.has_vertex(b))
            throw ParseError(signs_line, "edge " + std::to_string(a) + "-" + std::to_string(b) +
                                             " references an unknown vertex");
        if (a == b)
            throw ParseError(signs_line, "loop " + std::to_string(a) + "-" + std::to_string(b) +
                                             " is not allowed in a simple graph");
        g.set_edge(a, b, true);
    }
    return g;
}

std::string SignedGraph::serialize() const {
    std::string out = "signs:";
    for (int s : signs_) out += (s < 0) ? " -" : " +";
    out += '\n';
    bool contiguous = true;
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] != i + 1) contiguous = false;
    if (!contiguous) {
        out += "labels:";
        for (unsigned l : labels_) out += ' ' + std::to_string(l);
        out += '\n';
    }
    out += "edges:";
    bool first = true;
    for (size_t i = 0; i < labels_.size(); ++i) {
        // upper triangle only
        std::uint64_t r = (i + 1 < 64) ? (adj_[i] >> (i + 1) << (i + 1)) : 0;
        while (r) {
            const int j = std::countr_zero(r);
            out += first ? " " : ", ";
            out += std::to_string(labels_[i]) + "-" + std::to_string(labels_[j]);
            first = false;
            r &= r - 1;
        }
    }
    out += '\n';
    return out;
}

} // namespace petrial
