/*
 * petrial -- Euler genus and partial Petrial polynomials of ribbon graphs.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through these functions; every fallible call returns a
 * petrial_status, with a human-readable message available from
 * petrial_last_error() (thread-local, valid until the next failing call on
 * the same thread).
 *
 * Ribbon graphs are signed rotation systems. Text formats:
 *   rotation system   one record per vertex: "v1: 1 8 12"; records separated
 *                     by newlines or '/'; '#' starts a comment; a negative
 *                     integer marks a half-edge end carrying sign -.
 *   chord diagram     one line of signed integers: "1 2 -1 2" (a bouquet).
 *   signed graph      "signs: + - +" and "edges: 1-2, 2-3" lines.
 */

#ifndef PETRIAL_H
#define PETRIAL_H

#include <stdint.h>

#if defined(_WIN32)
#define PETRIAL_API __declspec(dllexport)
#else
#define PETRIAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum petrial_status {
    PETRIAL_OK = 0,
    PETRIAL_ERR_PARSE = 1,            /* malformed input text */
    PETRIAL_ERR_INVALID_ARGUMENT = 2, /* bad labels, trees, sizes, ... */
    PETRIAL_ERR_DISCONNECTED = 3,     /* a connected graph was required */
    PETRIAL_ERR_LIMIT = 4,            /* work estimate exceeds the cap */
    PETRIAL_ERR_NOT_BOUQUET = 5,      /* a one-vertex graph was required */
    PETRIAL_ERR_INTERNAL = 6
} petrial_status;

typedef struct petrial_graph petrial_graph;   /* ribbon graph / bouquet */
typedef struct petrial_sgraph petrial_sgraph; /* simple signed graph */
typedef struct petrial_poly petrial_poly;     /* integer polynomial in z */

PETRIAL_API const char* petrial_version(void);
PETRIAL_API const char* petrial_last_error(void);
PETRIAL_API void petrial_string_free(char* s);

/* ----- ribbon graphs ---------------------------------------------------- */

PETRIAL_API petrial_status petrial_graph_parse(const char* text, petrial_graph** out);
/* Chord-diagram line; the graph has a single vertex. */
PETRIAL_API petrial_status petrial_chord_parse(const char* text, petrial_graph** out);
/* Builds a bouquet from 2m signed labels (sign of the integer = end sign). */
PETRIAL_API petrial_status petrial_chord_from_sequence(const int32_t* seq, int32_t len,
                                                       petrial_graph** out);
PETRIAL_API void petrial_graph_free(petrial_graph* g);

PETRIAL_API petrial_status petrial_graph_serialize(const petrial_graph* g, char** out);
PETRIAL_API petrial_status petrial_chord_serialize(const petrial_graph* g, char** out);

PETRIAL_API int32_t petrial_graph_vertices(const petrial_graph* g);
PETRIAL_API int32_t petrial_graph_edges(const petrial_graph* g);
PETRIAL_API int32_t petrial_graph_is_bouquet(const petrial_graph* g);

PETRIAL_API petrial_status petrial_graph_boundary_components(const petrial_graph* g, int32_t* out);
PETRIAL_API petrial_status petrial_graph_connected_components(const petrial_graph* g, int32_t* out);
PETRIAL_API petrial_status petrial_graph_euler_genus(const petrial_graph* g, int32_t* out);

/* Euler genus as the GF(2) rank of the signed-intersection adjacency matrix
 * of the auxiliary bouquet. tree may be NULL with tree_len 0 to use the
 * deterministic spanning tree; the graph must be connected. */
PETRIAL_API petrial_status petrial_graph_genus_via_rank(const petrial_graph* g,
                                                        const uint32_t* tree, int32_t tree_len,
                                                        int32_t* out);

/* Twists the listed edges (an involution on the twist status of each edge). */
PETRIAL_API petrial_status petrial_graph_partial_petrial(const petrial_graph* g,
                                                         const uint32_t* edges, int32_t n,
                                                         petrial_graph** out);

PETRIAL_API petrial_status petrial_graph_contract_edge(const petrial_graph* g, uint32_t edge,
                                                       petrial_graph** out);

/* Deterministic spanning tree; variant 0 = depth-first from v1 with ascending
 * labels, variant 1 = depth-first from the last vertex with descending
 * labels. On entry *inout_len is the capacity of out_edges; on return it is
 * the number of tree edges written. */
PETRIAL_API petrial_status petrial_graph_spanning_tree(const petrial_graph* g, int32_t variant,
                                                       uint32_t* out_edges, int32_t* inout_len);

/* Contracts every tree edge (ascending label order); NULL tree = default. */
PETRIAL_API petrial_status petrial_graph_aux_bouquet(const petrial_graph* g, const uint32_t* tree,
                                                     int32_t tree_len, petrial_graph** out);

/* Intersection graph of a bouquet; with_signs != 0 marks twisted loops -. */
PETRIAL_API petrial_status petrial_graph_intersection(const petrial_graph* g, int32_t with_signs,
                                                      petrial_sgraph** out);

/* Joins two bouquets at one point (labels of b2 are shifted). */
PETRIAL_API petrial_status petrial_bouquet_join(const petrial_graph* b1, const petrial_graph* b2,
                                                petrial_graph** out);

/* 1 if some end of chord a is cyclically adjacent to an end of chord b. */
PETRIAL_API petrial_status petrial_chords_adjacent(const petrial_graph* g, uint32_t a, uint32_t b,
                                                   int32_t* out);

/* ----- signed graphs ---------------------------------------------------- */

PETRIAL_API petrial_status petrial_sgraph_parse(const char* text, petrial_sgraph** out);
/* n vertices labelled 1..n; signs[i] < 0 means vertex i+1 carries -;
 * edge_pairs holds edge_count (a,b) pairs. */
PETRIAL_API petrial_status petrial_sgraph_create(int32_t n, const int8_t* signs,
                                                 const uint32_t* edge_pairs, int32_t edge_count,
                                                 petrial_sgraph** out);
PETRIAL_API void petrial_sgraph_free(petrial_sgraph* s);
PETRIAL_API petrial_status petrial_sgraph_serialize(const petrial_sgraph* s, char** out);
PETRIAL_API int32_t petrial_sgraph_vertices(const petrial_sgraph* s);

/* ----- polynomials ------------------------------------------------------ */

/* Partial Petrial polynomial by subset enumeration with boundary tracing.
 * max_edges <= 0 selects the default cap (24); threads <= 0 uses all cores. */
PETRIAL_API petrial_status petrial_poly_bruteforce(const petrial_graph* g, int32_t max_edges,
                                                   int32_t threads, petrial_poly** out);

/* The same polynomial through the spanning-tree/rank decomposition.
 * tree NULL = deterministic tree; default cap 30. */
PETRIAL_API petrial_status petrial_poly_rank(const petrial_graph* g, const uint32_t* tree,
                                             int32_t tree_len, int32_t max_edges, int32_t threads,
                                             petrial_poly** out);

/* Modified (sign-alternating) polynomial of a bouquet. */
PETRIAL_API petrial_status petrial_poly_modified_bouquet(const petrial_graph* g,
                                                         petrial_poly** out);

/* Modified polynomial of a simple signed graph. */
PETRIAL_API petrial_status petrial_poly_modified_sgraph(const petrial_sgraph* s,
                                                        petrial_poly** out);

PETRIAL_API void petrial_poly_free(petrial_poly* p);
PETRIAL_API int32_t petrial_poly_degree(const petrial_poly* p);     /* -1 for 0 */
PETRIAL_API int32_t petrial_poly_min_degree(const petrial_poly* p); /* -1 for 0 */
PETRIAL_API int64_t petrial_poly_coeff(const petrial_poly* p, int32_t exponent);
PETRIAL_API int64_t petrial_poly_coeff_sum(const petrial_poly* p);
PETRIAL_API int32_t petrial_poly_equal(const petrial_poly* p, const petrial_poly* q);
PETRIAL_API petrial_status petrial_poly_mul(const petrial_poly* p, const petrial_poly* q,
                                            petrial_poly** out);
/* Human form, descending exponents: "1412z^7 + ... + z^2". */
PETRIAL_API petrial_status petrial_poly_format(const petrial_poly* p, char** out);

/* ----- four-term relation checkers -------------------------------------- */

/* Residual of P(B) - P(B~) - P(B~') + P(B') for adjacent chords a,b of a
 * bouquet; identically zero. sweep_all != 0 checks every adjacency witness. */
PETRIAL_API petrial_status petrial_four_term_chord(const petrial_graph* bouquet, uint32_t a,
                                                   uint32_t b, int32_t sweep_all,
                                                   petrial_poly** residual);

/* Residual of M(B) - M(B~) + M(B~') - M(B') for the modified polynomial. */
PETRIAL_API petrial_status petrial_four_term_modified(const petrial_graph* bouquet, uint32_t a,
                                                      uint32_t b, int32_t sweep_all,
                                                      petrial_poly** residual);

/* Residual of g(S) - g(S~) + g(S~') - g(S') on a simple signed graph. */
PETRIAL_API petrial_status petrial_four_term_sgraph(const petrial_sgraph* s, uint32_t a,
                                                    uint32_t b, petrial_poly** residual);

/* ----- random instances -------------------------------------------------- */

PETRIAL_API petrial_status petrial_random_bouquet(uint64_t seed, int32_t loops,
                                                  petrial_graph** out);
PETRIAL_API petrial_status petrial_random_ribbon(uint64_t seed, int32_t vertices, int32_t edges,
                                                 petrial_graph** out);
PETRIAL_API petrial_status petrial_random_sgraph(uint64_t seed, int32_t vertices,
                                                 petrial_sgraph** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PETRIAL_H */
