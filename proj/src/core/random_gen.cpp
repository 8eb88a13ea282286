#include "core/random_gen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "core/edge_set.hpp"

namespace petrial {

namespace {

EdgeSet random_subset(std::mt19937_64& rng, int m) {
    if (m == 0) return 0;
    return rng() & ((EdgeSet{1} << m) - 1);
}

} // namespace

Bouquet random_bouquet(std::mt19937_64& rng, int loops) {
    if (loops < 0 || loops > static_cast<int>(kMaxEdgeLabel))
        throw std::invalid_argument("loop count must lie in 0..64");
    std::vector<int> order(2 * loops);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::pair<int, int>> pairs(loops);
    for (int i = 0; i < loops; ++i)
        pairs[i] = std::minmax(order[2 * i], order[2 * i + 1]);
    std::sort(pairs.begin(), pairs.end()); // labels in order of first appearance

    std::vector<HalfEnd> seq(2 * loops);
    for (int i = 0; i < loops; ++i) {
        seq[pairs[i].first] = HalfEnd{static_cast<unsigned>(i + 1), 1};
        seq[pairs[i].second] = HalfEnd{static_cast<unsigned>(i + 1), 1};
    }
    Bouquet b(std::move(seq));
    return b.partial_petrial(random_subset(rng, loops));
}

RibbonGraph random_connected_ribbon(std::mt19937_64& rng, int vertices, int edges) {
    if (vertices < 1) throw std::invalid_argument("at least one vertex required");
    if (edges < 0 || edges > static_cast<int>(kMaxEdgeLabel))
        throw std::invalid_argument("edge count must lie in 0..64");
    if (edges < vertices - 1)
        throw std::invalid_argument("too few edges for a connected graph");

    std::uniform_int_distribution<int> pick(0, vertices - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::pair<int, int>> ends(edges);
        for (auto& e : ends) e = {pick(rng), pick(rng)};

        std::vector<std::vector<HalfEnd>> rot(vertices);
        for (int i = 0; i < edges; ++i) {
            rot[ends[i].first].push_back(HalfEnd{static_cast<unsigned>(i + 1), 1});
            rot[ends[i].second].push_back(HalfEnd{static_cast<unsigned>(i + 1), 1});
        }
        for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);

        RibbonGraph g{std::move(rot)};
        if (g.connected_components() != 1) continue;
        return g.partial_petrial(random_subset(rng, edges));
    }
    throw std::invalid_argument("could not sample a connected graph with these parameters");
}

SignedGraph random_signed_graph(std::mt19937_64& rng, int vertices) {
    SignedGraph g(vertices);
    for (int i = 1; i <= vertices; ++i) {
        if (rng() & 1u) g.set_sign(i, -1);
        for (int j = i + 1; j <= vertices; ++j)
            if (rng() & 1u) g.set_edge(i, j, true);
    }
    return g;
}

} // namespace petrial
