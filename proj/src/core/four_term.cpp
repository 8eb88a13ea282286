#include "core/four_term.hpp"

#include <stdexcept>
#include <utility>

#include "core/gf2_matrix.hpp"
#include "core/petrial_polynomial.hpp"

namespace petrial {

namespace {

void require_chords(const Bouquet& b, unsigned a, unsigned c) {
    if (a == c) throw std::invalid_argument("the two chords must be distinct");
    if (!b.has_loop(a)) throw std::invalid_argument("chord " + std::to_string(a) + " not present");
    if (!b.has_loop(c)) throw std::invalid_argument("chord " + std::to_string(c) + " not present");
}

ChordWitness require_witness(const Bouquet& b, unsigned a, unsigned c) {
    const auto w = find_witness(b, a, c);
    if (!w)
        throw std::invalid_argument("chords " + std::to_string(a) + " and " + std::to_string(c) +
                                    " are not adjacent");
    return *w;
}

} // namespace

std::vector<ChordWitness> all_witnesses(const Bouquet& b, unsigned a, unsigned c) {
    require_chords(b, a, c);
    const auto& seq = b.sequence();
    const int n = static_cast<int>(seq.size());
    std::vector<ChordWitness> ws;
    for (int i = 0; i < n; ++i) {
        const unsigned x = seq[i].label, y = seq[(i + 1) % n].label;
        if (x == a && y == c) ws.push_back({i, true});
        if (x == c && y == a) ws.push_back({i, false});
    }
    return ws;
}

std::optional<ChordWitness> find_witness(const Bouquet& b, unsigned a, unsigned c) {
    const auto ws = all_witnesses(b, a, c);
    if (ws.empty()) return std::nullopt;
    return ws.front();
}

bool chords_adjacent(const Bouquet& b, unsigned a, unsigned c) {
    return find_witness(b, a, c).has_value();
}

Bouquet exchange_transform(const Bouquet& b, unsigned a, unsigned c, const ChordWitness& w) {
    require_chords(b, a, c);
    std::vector<HalfEnd> seq = b.sequence();
    const int n = static_cast<int>(seq.size());
    std::swap(seq[w.pos], seq[(w.pos + 1) % n]);
    return Bouquet(std::move(seq));
}

Bouquet exchange_transform(const Bouquet& b, unsigned a, unsigned c) {
    return exchange_transform(b, a, c, require_witness(b, a, c));
}

Bouquet slide_transform(const Bouquet& b, unsigned a, unsigned c, const ChordWitness& w) {
    return chord_quadruple(b, a, c, w).slid;
}

Bouquet slide_transform(const Bouquet& b, unsigned a, unsigned c) {
    return slide_transform(b, a, c, require_witness(b, a, c));
}

ChordQuadruple chord_quadruple(const Bouquet& b, unsigned a, unsigned c, const ChordWitness& w) {
    require_chords(b, a, c);
    const auto& seq = b.sequence();
    const int n = static_cast<int>(seq.size());
    const int alpha = w.a_first ? w.pos : (w.pos + 1) % n;     // moving end of a
    const int beta = w.a_first ? (w.pos + 1) % n : w.pos;      // witnessed end of c
    if (seq[alpha].label != a || seq[beta].label != c)
        throw std::invalid_argument("witness does not match the chord pair");

    const auto [c1, c2] = b.positions(c);
    const int beta_other = (c1 == beta) ? c2 : c1; // the far end of c
    const bool c_twisted = b.twisted(c);

    ChordQuadruple out;
    out.base = b;
    out.exchanged = exchange_transform(b, a, c, w);

    // remove the moving end, then insert it next to c's far end
    std::vector<HalfEnd> reduced = seq;
    HalfEnd moved = seq[alpha];
    reduced.erase(reduced.begin() + alpha);
    if (c_twisted) moved.sign = -moved.sign;
    const int jr = beta_other - (beta_other > alpha ? 1 : 0);
    const bool after = (w.a_first != c_twisted); // before c's far end otherwise
    const int at = after ? jr + 1 : jr;
    reduced.insert(reduced.begin() + at, moved);
    out.slid = Bouquet(reduced);

    // the moved end and c's far end are now adjacent at (jr, jr+1); exchanging
    // them there is the tracked-witness composition of the two transforms
    std::swap(reduced[jr], reduced[jr + 1]);
    out.slid_exchanged = Bouquet(std::move(reduced));
    return out;
}

GenusPolynomial check_four_term_chord(const Bouquet& b, unsigned a, unsigned c, bool sweep_all) {
    const auto ws = sweep_all ? all_witnesses(b, a, c)
                              : std::vector<ChordWitness>{require_witness(b, a, c)};
    if (ws.empty())
        throw std::invalid_argument("chords " + std::to_string(a) + " and " + std::to_string(c) +
                                    " are not adjacent");
    for (const auto& w : ws) {
        const ChordQuadruple q = chord_quadruple(b, a, c, w);
        GenusPolynomial r = bouquet_rank_poly(q.base);
        r -= bouquet_rank_poly(q.slid);
        r -= bouquet_rank_poly(q.slid_exchanged);
        r += bouquet_rank_poly(q.exchanged);
        if (!r.is_zero()) return r;
    }
    return GenusPolynomial();
}

GenusPolynomial check_four_term_modified_bouquet(const Bouquet& b, unsigned a, unsigned c,
                                                 bool sweep_all) {
    const auto ws = sweep_all ? all_witnesses(b, a, c)
                              : std::vector<ChordWitness>{require_witness(b, a, c)};
    if (ws.empty())
        throw std::invalid_argument("chords " + std::to_string(a) + " and " + std::to_string(c) +
                                    " are not adjacent");
    for (const auto& w : ws) {
        const ChordQuadruple q = chord_quadruple(b, a, c, w);
        GenusPolynomial r = modified_poly_bouquet_rank(q.base);
        r -= modified_poly_bouquet_rank(q.slid);
        r += modified_poly_bouquet_rank(q.slid_exchanged);
        r -= modified_poly_bouquet_rank(q.exchanged);
        if (!r.is_zero()) return r;
    }
    return GenusPolynomial();
}

SignedGraph graph_prime_transform(const SignedGraph& s, unsigned a, unsigned b) {
    if (a == b) throw std::invalid_argument("the two vertices must be distinct");
    SignedGraph out = s;
    out.toggle_edge(a, b);
    return out;
}

SignedGraph graph_tilde_transform(const SignedGraph& s, unsigned a, unsigned b) {
    if (a == b) throw std::invalid_argument("the two vertices must be distinct");
    const int ia = s.index_of(a), ib = s.index_of(b);
    const int n = s.vertex_count();
    Gf2Matrix m = adjacency_gf2(s);
    // row b into row a, then column b into column a (current values)
    for (int j = 0; j < n; ++j)
        if (m.get(ib, j)) m.flip(ia, j);
    for (int i = 0; i < n; ++i)
        if (m.get(i, ib)) m.flip(i, ia);
    return signed_graph_from_matrix(m, s.labels());
}

GenusPolynomial check_four_term_signed_graph(const SignedGraph& s, unsigned a, unsigned b) {
    const SignedGraph tilde = graph_tilde_transform(s, a, b);
    const SignedGraph prime = graph_prime_transform(s, a, b);
    const SignedGraph tilde_prime = graph_prime_transform(tilde, a, b);
    GenusPolynomial r = modified_poly_signed_graph(s);
    r -= modified_poly_signed_graph(tilde);
    r += modified_poly_signed_graph(tilde_prime);
    r -= modified_poly_signed_graph(prime);
    return r;
}

} // namespace petrial
