#pragma once

#include "core/bouquet.hpp"
#include "core/edge_set.hpp"
#include "core/genus_polynomial.hpp"
#include "core/ribbon_graph.hpp"
#include "core/signed_graph.hpp"

namespace petrial {

// Both engines enumerate 2^m subsets; they refuse to start past these caps
// unless the caller raises them explicitly.
inline constexpr int kBruteforceEdgeCap = 24;
inline constexpr int kRankEdgeCap = 30;

// Partial Petrial polynomial by direct enumeration: one boundary trace per
// edge subset. Requires a connected graph and m <= max_edges.
GenusPolynomial petrial_poly_bruteforce(const RibbonGraph& g, int max_edges = kBruteforceEdgeCap,
                                        int threads = 1);

// The same polynomial through the spanning-tree decomposition: for every
// subset X of tree edges, build the auxiliary bouquet of the X-twisted graph,
// take the GF(2) adjacency matrix of its plain intersection graph, and sweep
// all diagonal masks over the non-tree labels, accumulating z^rank. Subsets
// of tree edges are the parallel unit. Must equal the brute-force result.
GenusPolynomial petrial_poly_rank(const RibbonGraph& g, EdgeSet tree, int max_edges = kRankEdgeCap,
                                  int threads = 1);

// Bouquet form of the rank expression: sum over all diagonal masks A of
// z^rank(adj(I(B)) + D_A).
GenusPolynomial bouquet_rank_poly(const Bouquet& b, int max_edges = kRankEdgeCap);

// Modified polynomial of a bouquet: sum of (-1)^|A| z^genus(B twisted on A).
// The two routes (boundary tracing / matrix rank) must agree.
GenusPolynomial modified_poly_bouquet(const Bouquet& b, int max_edges = kRankEdgeCap);
GenusPolynomial modified_poly_bouquet_rank(const Bouquet& b, int max_edges = kRankEdgeCap);

// Modified polynomial of a simple signed graph: with X the negative vertices
// and M the plain adjacency matrix of the underlying graph,
// sum over vertex subsets A of (-1)^|A| z^rank(M + D_{X xor A}).
GenusPolynomial modified_poly_signed_graph(const SignedGraph& s, int max_vertices = kRankEdgeCap);

} // namespace petrial
