#include "doctest.h"

#include <random>

#include "core/bouquet.hpp"
#include "core/errors.hpp"
#include "core/random_gen.hpp"
#include "core/signed_graph.hpp"
#include "support/generators.hpp"

using petrial::Bouquet;
using petrial::RibbonGraph;
using petrial::SignedGraph;

TEST_CASE("chord diagram text round-trips") {
    const Bouquet b = Bouquet::parse("1 2 -1 2");
    CHECK(b.loop_count() == 2);
    CHECK(b.twisted(1));
    CHECK_FALSE(b.twisted(2));
    CHECK(b.serialize() == "1 2 -1 2");
    CHECK(Bouquet::parse(b.serialize()) == b);

    CHECK(Bouquet::parse("").loop_count() == 0);
    CHECK_THROWS_AS(Bouquet::parse("1 1 3 3"), petrial::ParseError);
    CHECK_THROWS_AS(Bouquet::from_graph(RibbonGraph::parse("v1: 1 / v2: 1")),
                    petrial::NotBouquetError);
}

TEST_CASE("intersection graphs of the basic patterns") {
    const SignedGraph interlaced = intersection_graph(Bouquet::parse("1 2 1 2"));
    CHECK(interlaced.vertex_count() == 2);
    CHECK(interlaced.has_edge(1, 2));
    CHECK(interlaced.sign(1) == 1);

    const SignedGraph nested = intersection_graph(Bouquet::parse("1 1 2 2"));
    CHECK_FALSE(nested.has_edge(1, 2));

    const SignedGraph triangle = intersection_graph(Bouquet::parse("1 2 3 1 2 3"));
    CHECK(triangle.has_edge(1, 2));
    CHECK(triangle.has_edge(1, 3));
    CHECK(triangle.has_edge(2, 3));
}

TEST_CASE("signed intersection graph records framings") {
    const SignedGraph single = signed_intersection_graph(Bouquet::parse("1 -1"));
    CHECK(single.vertex_count() == 1);
    CHECK(single.sign(1) == -1);

    const SignedGraph plain = signed_intersection_graph(Bouquet::parse("1 2 1 2"));
    CHECK(plain.sign(1) == 1);
    CHECK(plain.sign(2) == 1);
    CHECK(plain.has_edge(1, 2));

    const SignedGraph mixed = signed_intersection_graph(Bouquet::parse("1 2 -1 2"));
    CHECK(mixed.sign(1) == -1);
    CHECK(mixed.sign(2) == 1);
    CHECK(mixed.has_edge(1, 2));
}

TEST_CASE("adjacency matrix over GF(2)") {
    SignedGraph s(3);
    CHECK(adjacency_gf2(s).rank() == 0);

    SignedGraph neg(1);
    neg.set_sign(1, -1);
    const auto m1 = adjacency_gf2(neg);
    CHECK(m1.get(0, 0));
    CHECK(m1.rank() == 1);

    SignedGraph k2(2);
    k2.set_edge(1, 2, true);
    const auto m2 = adjacency_gf2(k2);
    CHECK(m2.get(0, 1));
    CHECK(m2.get(1, 0));
    CHECK_FALSE(m2.get(0, 0));
    CHECK(m2.rank() == 2);
}

TEST_CASE("genus via rank on the standard examples") {
    CHECK(genus_via_rank(Bouquet::parse("1 1")) == 0);
    CHECK(genus_via_rank(Bouquet::parse("1 -1")) == 1);
    CHECK(genus_via_rank(Bouquet::parse("1 2 1 2")) == 2);
}

TEST_CASE("genus equals rank exhaustively for small bouquets") {
    for (int m = 0; m <= 4; ++m) {
        testsupport::for_each_bouquet(m, [](const Bouquet& b) {
            REQUIRE(b.euler_genus() == genus_via_rank(b));
        });
    }
}

TEST_CASE("genus equals rank on random ten-loop bouquets") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 100; ++trial) {
        const Bouquet b = petrial::random_bouquet(rng, 1 + static_cast<int>(rng() % 10));
        CHECK(b.euler_genus() == genus_via_rank(b));
    }
}

TEST_CASE("intersection graph ignores rotation and reflection") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const Bouquet b = petrial::random_bouquet(rng, 2 + static_cast<int>(rng() % 6));
        const auto base = intersection_graph(b);
        auto seq = b.sequence();

        std::rotate(seq.begin(), seq.begin() + static_cast<long>(rng() % seq.size()), seq.end());
        CHECK(intersection_graph(Bouquet(seq)) == base);

        std::reverse(seq.begin(), seq.end());
        CHECK(intersection_graph(Bouquet(seq)) == base);
    }
}

TEST_CASE("join concatenates with relabelling") {
    CHECK(join(Bouquet::parse("1 1"), Bouquet::parse("1 1")) == Bouquet::parse("1 1 2 2"));
    CHECK(join(Bouquet::parse("1 2 1 2"), Bouquet()) == Bouquet::parse("1 2 1 2"));
    CHECK(join(Bouquet::parse("1 2 1 2"), Bouquet::parse("1 -1")) ==
          Bouquet::parse("1 2 1 2 3 -3"));
}

TEST_CASE("join adds no interlacements") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const Bouquet b1 = petrial::random_bouquet(rng, 1 + static_cast<int>(rng() % 5));
        const Bouquet b2 = petrial::random_bouquet(rng, 1 + static_cast<int>(rng() % 5));
        const SignedGraph joined = intersection_graph(join(b1, b2));
        const SignedGraph g1 = intersection_graph(b1);
        const SignedGraph g2 = intersection_graph(b2);
        const unsigned off = static_cast<unsigned>(b1.loop_count());
        for (unsigned a : g1.labels())
            for (unsigned b : g1.labels())
                if (a < b) CHECK(joined.has_edge(a, b) == g1.has_edge(a, b));
        for (unsigned a : g2.labels())
            for (unsigned b : g2.labels())
                if (a < b) CHECK(joined.has_edge(a + off, b + off) == g2.has_edge(a, b));
        for (unsigned a : g1.labels())
            for (unsigned b : g2.labels()) CHECK_FALSE(joined.has_edge(a, b + off));
    }
}

TEST_CASE("signed graph text round-trips") {
    const SignedGraph g = SignedGraph::parse("signs: + - +\nedges: 1-2, 2-3");
    CHECK(g.vertex_count() == 3);
    CHECK(g.sign(2) == -1);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(SignedGraph::parse(g.serialize()) == g);

    const SignedGraph lonely = SignedGraph::parse("signs: -");
    CHECK(lonely.vertex_count() == 1);
    CHECK(lonely.edge_count() == 0);

    CHECK_THROWS_AS(SignedGraph::parse("edges: 1-2"), petrial::ParseError);
    CHECK_THROWS_AS(SignedGraph::parse("signs: + +\nedges: 1-1"), petrial::ParseError);
    CHECK_THROWS_AS(SignedGraph::parse("signs: + +\nedges: 1-3"), petrial::ParseError);

    // sparse labels survive serialization
    SignedGraph sparse({2, 5, 9}, {1, -1, 1});
    sparse.set_edge(2, 9, true);
    CHECK(SignedGraph::parse(sparse.serialize()) == sparse);
}
