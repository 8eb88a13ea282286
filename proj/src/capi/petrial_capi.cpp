#include "petrial.h"

#include <cstring>
#include <random>
#include <string>

#include "core/bouquet.hpp"
#include "core/contraction.hpp"
#include "core/errors.hpp"
#include "core/four_term.hpp"
#include "core/petrial_polynomial.hpp"
#include "core/random_gen.hpp"
#include "core/ribbon_graph.hpp"
#include "core/signed_graph.hpp"

struct petrial_graph {
    petrial::RibbonGraph g;
};

struct petrial_sgraph {
    petrial::SignedGraph s;
};

struct petrial_poly {
    petrial::GenusPolynomial p;
};

namespace {

thread_local std::string g_last_error;

petrial_status fail(petrial_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename F>
petrial_status guarded(F&& f) {
    try {
        f();
        return PETRIAL_OK;
    } catch (const petrial::ParseError& e) {
        return fail(PETRIAL_ERR_PARSE, e.what());
    } catch (const petrial::ConnectivityError& e) {
        return fail(PETRIAL_ERR_DISCONNECTED, e.what());
    } catch (const petrial::LimitError& e) {
        return fail(PETRIAL_ERR_LIMIT, e.what());
    } catch (const petrial::NotBouquetError& e) {
        return fail(PETRIAL_ERR_NOT_BOUQUET, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PETRIAL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(PETRIAL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(PETRIAL_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

petrial::EdgeSet edge_set_from_list(const uint32_t* edges, int32_t n) {
    if (n > 0 && edges == nullptr) throw std::invalid_argument("null edge list");
    petrial::EdgeSet s = 0;
    for (int32_t i = 0; i < n; ++i) {
        if (edges[i] < 1 || edges[i] > petrial::kMaxEdgeLabel)
            throw std::invalid_argument("edge labels must lie in 1..64");
        s |= petrial::edge_bit(edges[i]);
    }
    return s;
}

petrial::EdgeSet tree_or_default(const petrial::RibbonGraph& g, const uint32_t* tree,
                                 int32_t tree_len) {
    if (tree == nullptr && tree_len == 0) return petrial::spanning_tree(g);
    return edge_set_from_list(tree, tree_len);
}

} // namespace

extern "C" {

const char* petrial_version(void) { return "0.1.0"; }

const char* petrial_last_error(void) { return g_last_error.c_str(); }

void petrial_string_free(char* s) { delete[] s; }

/* ----- ribbon graphs ---------------------------------------------------- */

petrial_status petrial_graph_parse(const char* text, petrial_graph** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        *out = new petrial_graph{petrial::RibbonGraph::parse(text)};
    });
}

petrial_status petrial_chord_parse(const char* text, petrial_graph** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        *out = new petrial_graph{petrial::Bouquet::parse(text).to_graph()};
    });
}

petrial_status petrial_chord_from_sequence(const int32_t* seq, int32_t len, petrial_graph** out) {
    return guarded([&] {
        if ((!seq && len > 0) || !out || len < 0) throw std::invalid_argument("null argument");
        std::vector<petrial::HalfEnd> ends;
        ends.reserve(len);
        for (int32_t i = 0; i < len; ++i) {
            if (seq[i] == 0) throw std::invalid_argument("0 is not a valid chord label");
            const unsigned label = static_cast<unsigned>(seq[i] < 0 ? -seq[i] : seq[i]);
            ends.push_back(petrial::HalfEnd{label, seq[i] < 0 ? -1 : 1});
        }
        *out = new petrial_graph{petrial::Bouquet(std::move(ends)).to_graph()};
    });
}

void petrial_graph_free(petrial_graph* g) { delete g; }

petrial_status petrial_graph_serialize(const petrial_graph* g, char** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = dup_string(g->g.serialize());
    });
}

petrial_status petrial_chord_serialize(const petrial_graph* g, char** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = dup_string(petrial::Bouquet::from_graph(g->g).serialize());
    });
}

int32_t petrial_graph_vertices(const petrial_graph* g) { return g ? g->g.vertex_count() : -1; }

int32_t petrial_graph_edges(const petrial_graph* g) { return g ? g->g.edge_count() : -1; }

int32_t petrial_graph_is_bouquet(const petrial_graph* g) {
    return (g && g->g.is_bouquet()) ? 1 : 0;
}

petrial_status petrial_graph_boundary_components(const petrial_graph* g, int32_t* out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = g->g.boundary_components();
    });
}

petrial_status petrial_graph_connected_components(const petrial_graph* g, int32_t* out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = g->g.connected_components();
    });
}

petrial_status petrial_graph_euler_genus(const petrial_graph* g, int32_t* out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = g->g.euler_genus();
    });
}

petrial_status petrial_graph_genus_via_rank(const petrial_graph* g, const uint32_t* tree,
                                            int32_t tree_len, int32_t* out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        const petrial::EdgeSet t = tree_or_default(g->g, tree, tree_len);
        *out = petrial::genus_via_rank(petrial::aux_bouquet(g->g, t));
    });
}

petrial_status petrial_graph_partial_petrial(const petrial_graph* g, const uint32_t* edges,
                                             int32_t n, petrial_graph** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = new petrial_graph{g->g.partial_petrial(edge_set_from_list(edges, n))};
    });
}

petrial_status petrial_graph_contract_edge(const petrial_graph* g, uint32_t edge,
                                           petrial_graph** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = new petrial_graph{petrial::contract_edge(g->g, edge)};
    });
}

petrial_status petrial_graph_spanning_tree(const petrial_graph* g, int32_t variant,
                                           uint32_t* out_edges, int32_t* inout_len) {
    return guarded([&] {
        if (!g || !inout_len) throw std::invalid_argument("null argument");
        const auto policy = variant == 0 ? petrial::TreePolicy::dfs_ascending
                                         : petrial::TreePolicy::dfs_descending;
        const petrial::EdgeSet tree = petrial::spanning_tree(g->g, policy);
        const int32_t count = petrial::edge_set_size(tree);
        if (count > *inout_len || (count > 0 && !out_edges))
            throw std::invalid_argument("output buffer too small");
        int32_t i = 0;
        petrial::for_each_edge(tree, [&](unsigned l) { out_edges[i++] = l; });
        *inout_len = count;
    });
}

petrial_status petrial_graph_aux_bouquet(const petrial_graph* g, const uint32_t* tree,
                                         int32_t tree_len, petrial_graph** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        const petrial::EdgeSet t = tree_or_default(g->g, tree, tree_len);
        *out = new petrial_graph{petrial::aux_bouquet(g->g, t).to_graph()};
    });
}

petrial_status petrial_graph_intersection(const petrial_graph* g, int32_t with_signs,
                                          petrial_sgraph** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        const petrial::Bouquet b = petrial::Bouquet::from_graph(g->g);
        *out = new petrial_sgraph{with_signs ? petrial::signed_intersection_graph(b)
                                             : petrial::intersection_graph(b)};
    });
}

petrial_status petrial_bouquet_join(const petrial_graph* b1, const petrial_graph* b2,
                                    petrial_graph** out) {
    return guarded([&] {
        if (!b1 || !b2 || !out) throw std::invalid_argument("null argument");
        *out = new petrial_graph{petrial::join(petrial::Bouquet::from_graph(b1->g),
                                               petrial::Bouquet::from_graph(b2->g))
                                     .to_graph()};
    });
}

petrial_status petrial_chords_adjacent(const petrial_graph* g, uint32_t a, uint32_t b,
                                       int32_t* out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = petrial::chords_adjacent(petrial::Bouquet::from_graph(g->g), a, b) ? 1 : 0;
    });
}

/* ----- signed graphs ---------------------------------------------------- */

petrial_status petrial_sgraph_parse(const char* text, petrial_sgraph** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        *out = new petrial_sgraph{petrial::SignedGraph::parse(text)};
    });
}

petrial_status petrial_sgraph_create(int32_t n, const int8_t* signs, const uint32_t* edge_pairs,
                                     int32_t edge_count, petrial_sgraph** out) {
    return guarded([&] {
        if (!out || n < 0 || (n > 0 && !signs) || (edge_count > 0 && !edge_pairs))
            throw std::invalid_argument("null argument");
        petrial::SignedGraph s(n);
        for (int32_t i = 0; i < n; ++i)
            if (signs[i] < 0) s.set_sign(i + 1, -1);
        for (int32_t e = 0; e < edge_count; ++e)
            s.set_edge(edge_pairs[2 * e], edge_pairs[2 * e + 1], true);
        *out = new petrial_sgraph{std::move(s)};
    });
}

void petrial_sgraph_free(petrial_sgraph* s) { delete s; }

petrial_status petrial_sgraph_serialize(const petrial_sgraph* s, char** out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        *out = dup_string(s->s.serialize());
    });
}

int32_t petrial_sgraph_vertices(const petrial_sgraph* s) { return s ? s->s.vertex_count() : -1; }

/* ----- polynomials ------------------------------------------------------ */

petrial_status petrial_poly_bruteforce(const petrial_graph* g, int32_t max_edges, int32_t threads,
                                       petrial_poly** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        const int cap = max_edges <= 0 ? petrial::kBruteforceEdgeCap : max_edges;
        *out = new petrial_poly{petrial::petrial_poly_bruteforce(g->g, cap, threads)};
    });
}

petrial_status petrial_poly_rank(const petrial_graph* g, const uint32_t* tree, int32_t tree_len,
                                 int32_t max_edges, int32_t threads, petrial_poly** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        const int cap = max_edges <= 0 ? petrial::kRankEdgeCap : max_edges;
        const petrial::EdgeSet t = g->g.vertex_count() == 1
                                       ? edge_set_from_list(tree, tree_len)
                                       : tree_or_default(g->g, tree, tree_len);
        *out = new petrial_poly{petrial::petrial_poly_rank(g->g, t, cap, threads)};
    });
}

petrial_status petrial_poly_modified_bouquet(const petrial_graph* g, petrial_poly** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = new petrial_poly{petrial::modified_poly_bouquet(petrial::Bouquet::from_graph(g->g))};
    });
}

petrial_status petrial_poly_modified_sgraph(const petrial_sgraph* s, petrial_poly** out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        *out = new petrial_poly{petrial::modified_poly_signed_graph(s->s)};
    });
}

void petrial_poly_free(petrial_poly* p) { delete p; }

int32_t petrial_poly_degree(const petrial_poly* p) { return p ? p->p.degree() : -1; }

int32_t petrial_poly_min_degree(const petrial_poly* p) { return p ? p->p.min_degree() : -1; }

int64_t petrial_poly_coeff(const petrial_poly* p, int32_t exponent) {
    return p ? p->p.coeff(exponent) : 0;
}

int64_t petrial_poly_coeff_sum(const petrial_poly* p) { return p ? p->p.coeff_sum() : 0; }

int32_t petrial_poly_equal(const petrial_poly* p, const petrial_poly* q) {
    if (!p || !q) return 0;
    return p->p == q->p ? 1 : 0;
}

petrial_status petrial_poly_mul(const petrial_poly* p, const petrial_poly* q, petrial_poly** out) {
    return guarded([&] {
        if (!p || !q || !out) throw std::invalid_argument("null argument");
        *out = new petrial_poly{p->p * q->p};
    });
}

petrial_status petrial_poly_format(const petrial_poly* p, char** out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        *out = dup_string(p->p.to_text());
    });
}

/* ----- four-term relation checkers -------------------------------------- */

petrial_status petrial_four_term_chord(const petrial_graph* bouquet, uint32_t a, uint32_t b,
                                       int32_t sweep_all, petrial_poly** residual) {
    return guarded([&] {
        if (!bouquet || !residual) throw std::invalid_argument("null argument");
        *residual = new petrial_poly{petrial::check_four_term_chord(
            petrial::Bouquet::from_graph(bouquet->g), a, b, sweep_all != 0)};
    });
}

petrial_status petrial_four_term_modified(const petrial_graph* bouquet, uint32_t a, uint32_t b,
                                          int32_t sweep_all, petrial_poly** residual) {
    return guarded([&] {
        if (!bouquet || !residual) throw std::invalid_argument("null argument");
        *residual = new petrial_poly{petrial::check_four_term_modified_bouquet(
            petrial::Bouquet::from_graph(bouquet->g), a, b, sweep_all != 0)};
    });
}

petrial_status petrial_four_term_sgraph(const petrial_sgraph* s, uint32_t a, uint32_t b,
                                        petrial_poly** residual) {
    return guarded([&] {
        if (!s || !residual) throw std::invalid_argument("null argument");
        *residual = new petrial_poly{petrial::check_four_term_signed_graph(s->s, a, b)};
    });
}

/* ----- random instances -------------------------------------------------- */

petrial_status petrial_random_bouquet(uint64_t seed, int32_t loops, petrial_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        std::mt19937_64 rng(seed);
        *out = new petrial_graph{petrial::random_bouquet(rng, loops).to_graph()};
    });
}

petrial_status petrial_random_ribbon(uint64_t seed, int32_t vertices, int32_t edges,
                                     petrial_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        std::mt19937_64 rng(seed);
        *out = new petrial_graph{petrial::random_connected_ribbon(rng, vertices, edges)};
    });
}

petrial_status petrial_random_sgraph(uint64_t seed, int32_t vertices, petrial_sgraph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        std::mt19937_64 rng(seed);
        *out = new petrial_sgraph{petrial::random_signed_graph(rng, vertices)};
    });
}

} // extern "C"
