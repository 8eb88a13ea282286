#include "doctest.h"

#include <cstring>
#include <string>

#include "petrial.h"

namespace {

struct GraphHandle {
    petrial_graph* g = nullptr;
    ~GraphHandle() { petrial_graph_free(g); }
};

struct PolyHandle {
    petrial_poly* p = nullptr;
    ~PolyHandle() { petrial_poly_free(p); }
};

struct SgraphHandle {
    petrial_sgraph* s = nullptr;
    ~SgraphHandle() { petrial_sgraph_free(s); }
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    petrial_string_free(s);
    return out;
}

const char* kExampleGraph =
    "v1: 1 8 12 / v2: 9 4 2 3 8 / v3: 11 10 5 6 9 / v4: 7 4 11 / v5: 5 2 1 6 12 / v6: 3 7 10";

} // namespace

TEST_CASE("graph lifecycle and queries") {
    GraphHandle h;
    REQUIRE(petrial_graph_parse(kExampleGraph, &h.g) == PETRIAL_OK);
    CHECK(petrial_graph_vertices(h.g) == 6);
    CHECK(petrial_graph_edges(h.g) == 12);
    CHECK(petrial_graph_is_bouquet(h.g) == 0);

    int32_t out = -1;
    CHECK(petrial_graph_connected_components(h.g, &out) == PETRIAL_OK);
    CHECK(out == 1);
    CHECK(petrial_graph_euler_genus(h.g, &out) == PETRIAL_OK);
    CHECK(out == 6);
    CHECK(petrial_graph_genus_via_rank(h.g, nullptr, 0, &out) == PETRIAL_OK);
    CHECK(out == 6);
    CHECK(petrial_graph_boundary_components(h.g, &out) == PETRIAL_OK);
    CHECK(out == 2); // chi = 6 - 12 + 2 = -4, genus = 2*1 - (-4)

    char* text = nullptr;
    REQUIRE(petrial_graph_serialize(h.g, &text) == PETRIAL_OK);
    GraphHandle again;
    CHECK(petrial_graph_parse(take_string(text).c_str(), &again.g) == PETRIAL_OK);
    CHECK(petrial_graph_edges(again.g) == 12);
}

TEST_CASE("errors surface as status codes with messages") {
    petrial_graph* g = nullptr;
    CHECK(petrial_graph_parse("v1: 1", &g) == PETRIAL_ERR_PARSE);
    CHECK(std::strlen(petrial_last_error()) > 0);

    GraphHandle two;
    REQUIRE(petrial_graph_parse("v1: 1 1 / v2: 2 2", &two.g) == PETRIAL_OK);
    petrial_poly* p = nullptr;
    CHECK(petrial_poly_bruteforce(two.g, 0, 1, &p) == PETRIAL_ERR_DISCONNECTED);

    GraphHandle loop;
    REQUIRE(petrial_graph_parse("v1: 1 1", &loop.g) == PETRIAL_OK);
    CHECK(petrial_poly_bruteforce(loop.g, 0, 1, &p) == PETRIAL_OK);
    PolyHandle ph{p};
    CHECK(petrial_poly_coeff(ph.p, 0) == 1);
    CHECK(petrial_poly_coeff(ph.p, 1) == 1);

    petrial_graph* contracted = nullptr;
    CHECK(petrial_graph_contract_edge(loop.g, 1, &contracted) == PETRIAL_ERR_INVALID_ARGUMENT);

    petrial_sgraph* s = nullptr;
    CHECK(petrial_graph_intersection(two.g, 1, &s) == PETRIAL_ERR_NOT_BOUQUET);

    GraphHandle big;
    REQUIRE(petrial_random_bouquet(5, 20, &big.g) == PETRIAL_OK);
    CHECK(petrial_poly_bruteforce(big.g, 10, 1, &p) == PETRIAL_ERR_LIMIT);
}

TEST_CASE("polynomials through the C surface") {
    GraphHandle h;
    REQUIRE(petrial_graph_parse(kExampleGraph, &h.g) == PETRIAL_OK);

    PolyHandle brute, rank;
    REQUIRE(petrial_poly_bruteforce(h.g, 0, 0, &brute.p) == PETRIAL_OK);
    REQUIRE(petrial_poly_rank(h.g, nullptr, 0, 0, 0, &rank.p) == PETRIAL_OK);
    CHECK(petrial_poly_equal(brute.p, rank.p) == 1);
    CHECK(petrial_poly_coeff_sum(brute.p) == 4096);
    CHECK(petrial_poly_degree(brute.p) == 7);
    CHECK(petrial_poly_min_degree(brute.p) == 2);
    CHECK(petrial_poly_coeff(brute.p, 3) == 23);

    char* text = nullptr;
    REQUIRE(petrial_poly_format(brute.p, &text) == PETRIAL_OK);
    CHECK(take_string(text) == "1412z^7 + 1692z^6 + 779z^5 + 189z^4 + 23z^3 + z^2");

    // explicit tree override: same polynomial
    const uint32_t tree[] = {1, 2, 3, 7, 11};
    PolyHandle rank2;
    REQUIRE(petrial_poly_rank(h.g, tree, 5, 0, 1, &rank2.p) == PETRIAL_OK);
    CHECK(petrial_poly_equal(rank.p, rank2.p) == 1);

    const uint32_t not_tree[] = {1, 2, 3, 7, 12};
    petrial_poly* bad = nullptr;
    CHECK(petrial_poly_rank(h.g, not_tree, 5, 0, 1, &bad) == PETRIAL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("chords, transforms and residuals") {
    GraphHandle b;
    REQUIRE(petrial_chord_parse("1 2 1 -2", &b.g) == PETRIAL_OK);
    CHECK(petrial_graph_is_bouquet(b.g) == 1);

    int32_t adj = 0;
    REQUIRE(petrial_chords_adjacent(b.g, 1, 2, &adj) == PETRIAL_OK);
    CHECK(adj == 1);

    PolyHandle r1, r2;
    REQUIRE(petrial_four_term_chord(b.g, 1, 2, 1, &r1.p) == PETRIAL_OK);
    CHECK(petrial_poly_degree(r1.p) == -1);
    REQUIRE(petrial_four_term_modified(b.g, 1, 2, 1, &r2.p) == PETRIAL_OK);
    CHECK(petrial_poly_degree(r2.p) == -1);

    PolyHandle m;
    REQUIRE(petrial_poly_modified_bouquet(b.g, &m.p) == PETRIAL_OK);
    CHECK(petrial_poly_coeff(m.p, 1) == -1);
    CHECK(petrial_poly_coeff(m.p, 2) == 1);

    char* text = nullptr;
    REQUIRE(petrial_chord_serialize(b.g, &text) == PETRIAL_OK);
    CHECK(take_string(text) == "1 2 1 -2");

    const int32_t seq[] = {1, 2, -1, 2};
    GraphHandle from_seq;
    REQUIRE(petrial_chord_from_sequence(seq, 4, &from_seq.g) == PETRIAL_OK);
    REQUIRE(petrial_chord_serialize(from_seq.g, &text) == PETRIAL_OK);
    CHECK(take_string(text) == "1 2 -1 2");
}

TEST_CASE("signed graphs and the four-term residual") {
    SgraphHandle s;
    REQUIRE(petrial_sgraph_parse("signs: + - +\nedges: 1-2, 2-3", &s.s) == PETRIAL_OK);
    CHECK(petrial_sgraph_vertices(s.s) == 3);

    PolyHandle r;
    REQUIRE(petrial_four_term_sgraph(s.s, 1, 3, &r.p) == PETRIAL_OK);
    CHECK(petrial_poly_degree(r.p) == -1);

    const int8_t signs[] = {1, -1};
    const uint32_t edges[] = {1, 2};
    SgraphHandle s2;
    REQUIRE(petrial_sgraph_create(2, signs, edges, 1, &s2.s) == PETRIAL_OK);
    PolyHandle mp;
    REQUIRE(petrial_poly_modified_sgraph(s2.s, &mp.p) == PETRIAL_OK);
    CHECK(petrial_poly_coeff_sum(mp.p) == 0);

    char* text = nullptr;
    REQUIRE(petrial_sgraph_serialize(s2.s, &text) == PETRIAL_OK);
    CHECK(take_string(text) == "signs: + -\nedges: 1-2\n");
}

TEST_CASE("join and polynomial multiplication") {
    GraphHandle b1, b2, joined;
    REQUIRE(petrial_chord_parse("1 2 1 2", &b1.g) == PETRIAL_OK);
    REQUIRE(petrial_chord_parse("1 -1", &b2.g) == PETRIAL_OK);
    REQUIRE(petrial_bouquet_join(b1.g, b2.g, &joined.g) == PETRIAL_OK);

    char* text = nullptr;
    REQUIRE(petrial_chord_serialize(joined.g, &text) == PETRIAL_OK);
    CHECK(take_string(text) == "1 2 1 2 3 -3");

    PolyHandle p1, p2, pj, prod;
    REQUIRE(petrial_poly_bruteforce(b1.g, 0, 1, &p1.p) == PETRIAL_OK);
    REQUIRE(petrial_poly_bruteforce(b2.g, 0, 1, &p2.p) == PETRIAL_OK);
    REQUIRE(petrial_poly_bruteforce(joined.g, 0, 1, &pj.p) == PETRIAL_OK);
    REQUIRE(petrial_poly_mul(p1.p, p2.p, &prod.p) == PETRIAL_OK);
    CHECK(petrial_poly_equal(pj.p, prod.p) == 1);
}

TEST_CASE("random generation is deterministic per seed") {
    GraphHandle a, b, c;
    REQUIRE(petrial_random_ribbon(1234, 4, 7, &a.g) == PETRIAL_OK);
    REQUIRE(petrial_random_ribbon(1234, 4, 7, &b.g) == PETRIAL_OK);
    REQUIRE(petrial_random_ribbon(4321, 4, 7, &c.g) == PETRIAL_OK);

    char *ta = nullptr, *tb = nullptr, *tc = nullptr;
    REQUIRE(petrial_graph_serialize(a.g, &ta) == PETRIAL_OK);
    REQUIRE(petrial_graph_serialize(b.g, &tb) == PETRIAL_OK);
    REQUIRE(petrial_graph_serialize(c.g, &tc) == PETRIAL_OK);
    const std::string sa = take_string(ta), sb = take_string(tb), sc = take_string(tc);
    CHECK(sa == sb);
    CHECK(sa != sc);

    int32_t comp = 0;
    REQUIRE(petrial_graph_connected_components(a.g, &comp) == PETRIAL_OK);
    CHECK(comp == 1);

    // spanning tree export
    uint32_t tree[16];
    int32_t len = 16;
    REQUIRE(petrial_graph_spanning_tree(a.g, 0, tree, &len) == PETRIAL_OK);
    CHECK(len == 3);

    GraphHandle aux;
    REQUIRE(petrial_graph_aux_bouquet(a.g, tree, len, &aux.g) == PETRIAL_OK);
    CHECK(petrial_graph_is_bouquet(aux.g) == 1);
    CHECK(petrial_graph_edges(aux.g) == 4);
}
