#include "core/petrial_polynomial.hpp"

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "core/contraction.hpp"
#include "core/errors.hpp"
#include "core/gf2_matrix.hpp"

namespace petrial {

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void check_cap(int m, int max_edges, const char* what) {
    if (max_edges <= 0) throw std::invalid_argument("edge cap must be positive");
    if (m > max_edges)
        throw LimitError(std::string(what) + " would enumerate 2^" + std::to_string(m) +
                         " subsets; cap is 2^" + std::to_string(max_edges) +
                         " (raise the cap to force)");
}

GenusPolynomial merge_counts(const std::vector<std::vector<long long>>& counts) {
    GenusPolynomial p;
    for (const auto& local : counts)
        for (size_t e = 0; e < local.size(); ++e) p.add_term(static_cast<int>(e), local[e]);
    return p;
}

} // namespace

GenusPolynomial petrial_poly_bruteforce(const RibbonGraph& g, int max_edges, int threads) {
    if (g.connected_components() != 1) throw ConnectivityError("graph must be connected");
    const int m = g.edge_count();
    check_cap(m, max_edges, "brute-force enumeration");

    const BoundaryTracer tracer(g);
    const EdgeSet base = tracer.base_twist_by_index();
    const std::uint64_t total = std::uint64_t{1} << m;

    const int nthreads = std::min<std::uint64_t>(resolve_threads(threads), total);
    std::vector<std::vector<long long>> counts(nthreads);
    auto work = [&](int t) {
        BoundaryTracer::Scratch scratch;
        auto& local = counts[t];
        local.assign(2 * m + 3, 0);
        const std::uint64_t lo = total / nthreads * t + std::min<std::uint64_t>(t, total % nthreads);
        const std::uint64_t hi = lo + total / nthreads + (static_cast<std::uint64_t>(t) < total % nthreads ? 1 : 0);
        for (std::uint64_t a = lo; a < hi; ++a) ++local[tracer.euler_genus(base ^ a, scratch)];
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    return merge_counts(counts);
}

GenusPolynomial petrial_poly_rank(const RibbonGraph& g, EdgeSet tree, int max_edges, int threads) {
    if (g.connected_components() != 1) throw ConnectivityError("graph must be connected");
    const int m = g.edge_count();
    check_cap(m, max_edges, "rank enumeration");

    if (g.vertex_count() == 1) {
        if (tree != 0) throw std::invalid_argument("a bouquet has no spanning-tree edges");
        return bouquet_rank_poly(Bouquet::from_graph(g), max_edges);
    }
    if (!is_spanning_tree(g, tree))
        throw std::invalid_argument("the given edge set is not a spanning tree");

    std::vector<unsigned> tree_labels;
    for_each_edge(tree, [&](unsigned l) { tree_labels.push_back(l); });
    const int k = static_cast<int>(tree_labels.size());
    const int q = m - k;
    const std::uint64_t x_total = std::uint64_t{1} << k;
    const std::uint64_t y_total = std::uint64_t{1} << q;

    const int nthreads = std::min<std::uint64_t>(resolve_threads(threads), x_total);
    std::vector<std::vector<long long>> counts(nthreads);
    std::atomic<std::uint64_t> next_x{0};
    auto work = [&](int t) {
        auto& local = counts[t];
        local.assign(m + 2, 0);
        for (;;) {
            const std::uint64_t x = next_x.fetch_add(1);
            if (x >= x_total) break;
            EdgeSet xset = 0;
            for (int i = 0; i < k; ++i)
                if ((x >> i) & 1u) xset |= edge_bit(tree_labels[i]);
            const Bouquet aux = aux_bouquet(g.partial_petrial(xset), tree);
            const Gf2Matrix mat = adjacency_gf2(intersection_graph(aux));
            for (std::uint64_t y = 0; y < y_total; ++y) ++local[mat.rank_with_diagonal(y)];
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    return merge_counts(counts);
}

GenusPolynomial bouquet_rank_poly(const Bouquet& b, int max_edges) {
    const int k = b.loop_count();
    check_cap(k, max_edges, "rank enumeration");
    const Gf2Matrix mat = adjacency_gf2(intersection_graph(b));
    GenusPolynomial p;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a)
        p.add_term(mat.rank_with_diagonal(a), 1);
    return p;
}

GenusPolynomial modified_poly_bouquet(const Bouquet& b, int max_edges) {
    const int k = b.loop_count();
    check_cap(k, max_edges, "modified-polynomial enumeration");
    const BoundaryTracer tracer(b.to_graph());
    const EdgeSet base = tracer.base_twist_by_index();
    BoundaryTracer::Scratch scratch;
    GenusPolynomial p;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
        const int genus = tracer.euler_genus(base ^ a, scratch);
        p.add_term(genus, (std::popcount(a) & 1) ? -1 : 1);
    }
    return p;
}

GenusPolynomial modified_poly_bouquet_rank(const Bouquet& b, int max_edges) {
    const int k = b.loop_count();
    check_cap(k, max_edges, "modified-polynomial enumeration");
    const Gf2Matrix mat = adjacency_gf2(intersection_graph(b));
    // twisted loops as an index mask in sorted-label order
    std::uint64_t tmask = 0;
    for (int i = 0; i < k; ++i)
        if (b.twisted(b.loop_labels()[i])) tmask |= std::uint64_t{1} << i;
    GenusPolynomial p;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a)
        p.add_term(mat.rank_with_diagonal(tmask ^ a), (std::popcount(a) & 1) ? -1 : 1);
    return p;
}

GenusPolynomial modified_poly_signed_graph(const SignedGraph& s, int max_vertices) {
    const int n = s.vertex_count();
    check_cap(n, max_vertices, "modified-polynomial enumeration");
    Gf2Matrix mat = adjacency_gf2(s);
    for (int i = 0; i < n; ++i) mat.set(i, i, false); // plain adjacency; signs go through X
    const std::uint64_t x = s.negative_mask();
    GenusPolynomial p;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
        p.add_term(mat.rank_with_diagonal(x ^ a), (std::popcount(a) & 1) ? -1 : 1);
    return p;
}

} // namespace petrial
