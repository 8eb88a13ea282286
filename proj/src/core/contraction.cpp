#include "core/contraction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"

namespace petrial {

EdgeSet spanning_tree(const RibbonGraph& g, TreePolicy policy) {
    if (g.connected_components() != 1) throw ConnectivityError("graph must be connected");
    const int n = g.vertex_count();

    // incidence lists sorted by label
    std::vector<std::vector<std::pair<unsigned, int>>> adj(n);
    for (unsigned l : g.sorted_labels()) {
        const auto [u, v] = g.edge_endpoints(l);
        if (u == v) continue;
        adj[u].emplace_back(l, v);
        adj[v].emplace_back(l, u);
    }
    const bool descending = policy == TreePolicy::dfs_descending;
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        if (descending) std::reverse(a.begin(), a.end());
    }

    EdgeSet tree = 0;
    std::vector<bool> visited(n, false);
    // depth-first with an explicit stack of (vertex, next candidate index)
    std::vector<std::pair<int, size_t>> stack;
    const int root = descending ? n - 1 : 0;
    visited[root] = true;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
        auto& [u, next] = stack.back();
        if (next == adj[u].size()) {
            stack.pop_back();
            continue;
        }
        const auto [label, w] = adj[u][next++];
        if (visited[w]) continue;
        visited[w] = true;
        tree |= edge_bit(label);
        stack.emplace_back(w, 0);
    }
    return tree;
}

bool is_spanning_tree(const RibbonGraph& g, EdgeSet tree) {
    const int n = g.vertex_count();
    if (edge_set_size(tree) != n - 1) return false;

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    bool ok = true;
    for_each_edge(tree, [&](unsigned label) {
        if (!ok) return;
        if (!g.has_edge(label)) {
            ok = false;
            return;
        }
        const auto [u, v] = g.edge_endpoints(label);
        if (u == v) { // loops never belong to a tree
            ok = false;
            return;
        }
        const int ru = find(u), rv = find(v);
        if (ru == rv) { // cycle
            ok = false;
            return;
        }
        parent[ru] = rv;
    });
    if (!ok) return false;
    for (int v = 1; v < n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

RibbonGraph contract_edge(const RibbonGraph& g, unsigned e) {
    if (!g.has_edge(e)) throw std::invalid_argument("edge " + std::to_string(e) + " not present");
    const auto [u, v] = g.edge_endpoints(e);
    if (u == v) throw std::invalid_argument("cannot contract a loop (edge " + std::to_string(e) + ")");

    const auto& rot = g.rotations();
    const bool twisted = g.edge_twisted(e);

    // remainder of a rotation read cyclically from just after e's end
    auto remainder = [&](int vertex) {
        const auto& r = rot[vertex];
        const int k = static_cast<int>(r.size());
        int at = -1;
        for (int p = 0; p < k; ++p)
            if (r[p].label == e) at = p;
        std::vector<HalfEnd> rest;
        rest.reserve(k - 1);
        for (int s = 1; s < k; ++s) rest.push_back(r[(at + s) % k]);
        return rest;
    };

    std::vector<HalfEnd> a = remainder(u);
    std::vector<HalfEnd> b = remainder(v);
    if (twisted) {
        std::reverse(b.begin(), b.end());
        for (HalfEnd& h : b) h.sign = -h.sign;
    }
    a.insert(a.end(), b.begin(), b.end());

    std::vector<std::vector<HalfEnd>> merged;
    merged.reserve(rot.size() - 1);
    const int keep = std::min(u, v), drop = std::max(u, v);
    for (int w = 0; w < static_cast<int>(rot.size()); ++w) {
        if (w == drop) continue;
        if (w == keep)
            merged.push_back(a);
        else
            merged.push_back(rot[w]);
    }
    return RibbonGraph(std::move(merged));
}

Bouquet aux_bouquet(const RibbonGraph& g, EdgeSet tree) {
    if (g.connected_components() != 1) throw ConnectivityError("graph must be connected");
    if (!is_spanning_tree(g, tree))
        throw std::invalid_argument("the given edge set is not a spanning tree");
    RibbonGraph cur = g;
    for_each_edge(tree, [&](unsigned label) { cur = contract_edge(cur, label); });
    return Bouquet::from_graph(cur);
}

RibbonGraph twist_edges(const RibbonGraph& g, EdgeSet x) { return g.partial_petrial(x); }

} // namespace petrial
