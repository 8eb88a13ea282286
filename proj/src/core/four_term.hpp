#pragma once

#include <optional>
#include <vector>

#include "core/bouquet.hpp"
#include "core/genus_polynomial.hpp"
#include "core/signed_graph.hpp"

namespace petrial {

// Chords a and b are adjacent when an end of a immediately precedes or
// follows an end of b in the cyclic rotation. A witness records where:
// position pos holds the end of a and (pos+1) mod 2m the end of b when
// a_first, and the other way round otherwise.
struct ChordWitness {
    int pos = 0;
    bool a_first = true;
};

std::optional<ChordWitness> find_witness(const Bouquet& b, unsigned a, unsigned c);
std::vector<ChordWitness> all_witnesses(const Bouquet& b, unsigned a, unsigned c);
bool chords_adjacent(const Bouquet& b, unsigned a, unsigned c);

// Swaps the two adjacent ends (with their signs). Involutive at a fixed
// witness; toggles the interlacement of exactly the pair {a,c}.
Bouquet exchange_transform(const Bouquet& b, unsigned a, unsigned c, const ChordWitness& w);
Bouquet exchange_transform(const Bouquet& b, unsigned a, unsigned c); // leftmost witness

// Slides the witnessed end of a along chord c: the moved end re-attaches next
// to c's other end -- after it when c is untwisted, before it with the sign
// negated when c is twisted -- mirrored when the witness order is (c, a).
// Realizes a ribbon slide, so the Euler genus is preserved.
Bouquet slide_transform(const Bouquet& b, unsigned a, unsigned c, const ChordWitness& w);
Bouquet slide_transform(const Bouquet& b, unsigned a, unsigned c); // leftmost witness

// The four diagrams of the four-term relation built from one witness; the
// doubly transformed diagram uses the witness carried through the slide (the
// two orders of composing the transforms give the same cyclic sequence).
struct ChordQuadruple {
    Bouquet base;
    Bouquet slid;           // B~
    Bouquet slid_exchanged; // B~'
    Bouquet exchanged;      // B'
};
ChordQuadruple chord_quadruple(const Bouquet& b, unsigned a, unsigned c, const ChordWitness& w);

// Residual of the partial Petrial polynomial relation
//   P(B) - P(B~) - P(B~') + P(B') ;
// identically zero. With sweep_all, every witness is checked and the first
// nonzero residual (if any) is returned.
GenusPolynomial check_four_term_chord(const Bouquet& b, unsigned a, unsigned c, bool sweep_all = false);

// Residual of the modified polynomial relation M(B) - M(B~) + M(B~') - M(B').
GenusPolynomial check_four_term_modified_bouquet(const Bouquet& b, unsigned a, unsigned c,
                                                 bool sweep_all = false);

// S'_{a,b}: toggles the edge ab, signs unchanged.
SignedGraph graph_prime_transform(const SignedGraph& s, unsigned a, unsigned b);

// S~_{a,b}, defined through the signed adjacency matrix: add row b into row a
// and column b into column a over GF(2), then read the graph back (diagonal
// bits are the - signs). Toggles a's adjacency with N(b); when sign(b) is -,
// it also toggles the edge ab itself and flips the sign of a.
SignedGraph graph_tilde_transform(const SignedGraph& s, unsigned a, unsigned b);

// Residual of g(S) - g(S~) + g(S~') - g(S') with g the modified polynomial.
GenusPolynomial check_four_term_signed_graph(const SignedGraph& s, unsigned a, unsigned b);

} // namespace petrial
