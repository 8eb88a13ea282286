#include "doctest.h"

#include <random>

#include "core/contraction.hpp"
#include "core/errors.hpp"
#include "core/petrial_polynomial.hpp"
#include "core/random_gen.hpp"
#include "support/generators.hpp"

using petrial::aux_bouquet;
using petrial::Bouquet;
using petrial::contract_edge;
using petrial::edge_bit;
using petrial::EdgeSet;
using petrial::RibbonGraph;
using petrial::spanning_tree;
using petrial::twist_edges;

namespace {

const char* kExampleGraph =
    "v1: 1 8 12 / v2: 9 4 2 3 8 / v3: 11 10 5 6 9 / v4: 7 4 11 / v5: 5 2 1 6 12 / v6: 3 7 10";

EdgeSet make_set(std::initializer_list<unsigned> labels) {
    EdgeSet s = 0;
    for (unsigned l : labels) s |= edge_bit(l);
    return s;
}

} // namespace

TEST_CASE("deterministic spanning tree") {
    // depth-first from v1, candidate edges in ascending label order
    CHECK(spanning_tree(RibbonGraph::parse(kExampleGraph)) == make_set({1, 2, 3, 7, 11}));
    CHECK(spanning_tree(RibbonGraph::parse("v1: 1 1")) == 0);
    CHECK(spanning_tree(RibbonGraph::parse("v1: 1 / v2: 1")) == make_set({1}));
    CHECK_THROWS_AS(spanning_tree(RibbonGraph::parse("v1: 1 1 / v2: 2 2")),
                    petrial::ConnectivityError);

    const RibbonGraph g = RibbonGraph::parse(kExampleGraph);
    CHECK(petrial::is_spanning_tree(g, make_set({1, 2, 3, 7, 11})));
    CHECK(petrial::is_spanning_tree(g, spanning_tree(g, petrial::TreePolicy::dfs_descending)));
    CHECK_FALSE(petrial::is_spanning_tree(g, make_set({1, 2, 3, 7})));     // too small
    CHECK_FALSE(petrial::is_spanning_tree(g, make_set({1, 2, 3, 7, 12}))); // 1,12 parallel cycle
}

TEST_CASE("contracting a doubled edge gives the expected loops") {
    using petrial::HalfEnd;
    // surviving edges keep their labels, so the results carry label 2
    const RibbonGraph plain = RibbonGraph::parse("v1: 1 2 / v2: 1 2");
    CHECK(contract_edge(plain, 1) == RibbonGraph({{HalfEnd{2, 1}, HalfEnd{2, 1}}}));

    const RibbonGraph twisted = RibbonGraph::parse("v1: 1 2 / v2: -1 2");
    CHECK(contract_edge(twisted, 1) == RibbonGraph({{HalfEnd{2, 1}, HalfEnd{2, -1}}}));
}

TEST_CASE("contraction rejects loops and unknown edges") {
    const RibbonGraph g = RibbonGraph::parse("v1: 1 2 2 / v2: 1");
    CHECK_THROWS_AS(contract_edge(g, 2), std::invalid_argument);
    CHECK_THROWS_AS(contract_edge(g, 9), std::invalid_argument);
}

TEST_CASE("contracting any tree edge preserves the euler genus") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int m = (n - 1) + static_cast<int>(rng() % 5);
        const RibbonGraph g = petrial::random_connected_ribbon(rng, n, m);
        const EdgeSet tree = spanning_tree(g);
        petrial::for_each_edge(tree, [&](unsigned e) {
            CHECK(contract_edge(g, e).euler_genus() == g.euler_genus());
        });
    }
}

TEST_CASE("aux bouquet of a bouquet is itself") {
    const RibbonGraph b = RibbonGraph::parse("v1: 1 2 -1 2");
    CHECK(aux_bouquet(b, 0).to_graph() == b);
}

TEST_CASE("aux bouquet of the doubled edge") {
    const RibbonGraph g = RibbonGraph::parse("v1: 1 2 / v2: 1 2");
    const Bouquet aux = aux_bouquet(g, make_set({1}));
    CHECK(aux == Bouquet(std::vector<petrial::HalfEnd>{{2, 1}, {2, 1}}));
    CHECK(aux.euler_genus() == 0);
}

TEST_CASE("aux bouquet of the worked example matches the graph genus") {
    const RibbonGraph g = RibbonGraph::parse(kExampleGraph);
    const Bouquet aux = aux_bouquet(g, spanning_tree(g));
    CHECK(aux.loop_count() == 7);
    CHECK(aux.loop_labels() == std::vector<unsigned>{4, 5, 6, 8, 9, 10, 12});
    CHECK(genus_via_rank(aux) == g.euler_genus());
    CHECK(aux.euler_genus() == g.euler_genus());
}

TEST_CASE("genus equals aux-bouquet rank for every spanning tree of small graphs") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int m = n + static_cast<int>(rng() % 3);
        const RibbonGraph g = petrial::random_connected_ribbon(rng, n, m);
        for (EdgeSet tree : testsupport::all_spanning_trees(g)) {
            const Bouquet aux = aux_bouquet(g, tree);
            CHECK(aux.euler_genus() == g.euler_genus());
            CHECK(genus_via_rank(aux) == g.euler_genus());
        }
    }
}

TEST_CASE("twist_edges is partial petrial") {
    const RibbonGraph g = RibbonGraph::parse(kExampleGraph);
    CHECK(twist_edges(g, 0) == g);
    const EdgeSet x = make_set({2, 7, 12});
    CHECK(twist_edges(twist_edges(g, x), x) == g);
    CHECK(twist_edges(g, x) == g.partial_petrial(x));
}

TEST_CASE("twisting non-tree edges commutes with contraction") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int m = n + static_cast<int>(rng() % 4);
        const RibbonGraph g = petrial::random_connected_ribbon(rng, n, m);
        const EdgeSet tree = spanning_tree(g);
        const EdgeSet nontree = g.edge_labels() & ~tree;

        // random X within the tree, Y outside it
        const EdgeSet x = rng() & tree;
        const EdgeSet y = rng() & nontree;

        const Bouquet lhs = aux_bouquet(twist_edges(twist_edges(g, x), y), tree);
        const Bouquet rhs = Bouquet::from_graph(
            aux_bouquet(twist_edges(g, x), tree).to_graph().partial_petrial(y));
        // equality of signed intersection graphs identifies the two routes
        CHECK(signed_intersection_graph(lhs) == signed_intersection_graph(rhs));
    }
}

TEST_CASE("contraction order does not change genus or polynomial") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 2);
        const int m = n + static_cast<int>(rng() % 3);
        const RibbonGraph g = petrial::random_connected_ribbon(rng, n, m);
        const EdgeSet tree = spanning_tree(g);
        std::vector<unsigned> order;
        petrial::for_each_edge(tree, [&](unsigned l) { order.push_back(l); });

        const Bouquet ascending = aux_bouquet(g, tree);
        std::shuffle(order.begin(), order.end(), rng);
        RibbonGraph cur = g;
        for (unsigned e : order) cur = contract_edge(cur, e);
        const Bouquet shuffled = Bouquet::from_graph(cur);

        CHECK(shuffled.euler_genus() == ascending.euler_genus());
        CHECK(petrial::bouquet_rank_poly(shuffled) == petrial::bouquet_rank_poly(ascending));
    }
}
