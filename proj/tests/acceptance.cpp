// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is taken from argv[1] so the worked example
// can also be driven end to end through the command line.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "core/contraction.hpp"
#include "core/four_term.hpp"
#include "core/petrial_polynomial.hpp"
#include "core/random_gen.hpp"
#include "support/generators.hpp"

using namespace petrial;

namespace {

const char* kExampleGraph =
    "v1: 1 8 12 / v2: 9 4 2 3 8 / v3: 11 10 5 6 9 / v4: 7 4 11 / v5: 5 2 1 6 12 / v6: 3 7 10";
const char* kExamplePoly = "1412z^7 + 1692z^6 + 779z^5 + 189z^4 + 23z^3 + z^2";

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "[" << criterion << "] " << (pass ? "PASS" : "FAIL") << " " << detail << "\n";
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string run_cli(const std::string& command, int* exit_code) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return output;
    }
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    *exit_code = pclose(pipe);
    return output;
}

// 1. The worked six-vertex example: both engines, exact polynomial, through
//    the library and through the CLI, each under five seconds.
void criterion_worked_example(const std::string& cli) {
    const RibbonGraph g = RibbonGraph::parse(kExampleGraph);

    auto start = std::chrono::steady_clock::now();
    const GenusPolynomial brute = petrial_poly_bruteforce(g);
    const double brute_time = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const GenusPolynomial rank = petrial_poly_rank(g, spanning_tree(g));
    const double rank_time = seconds_since(start);

    bool pass = brute.to_text() == kExamplePoly && rank.to_text() == kExamplePoly &&
                brute.coeff_sum() == 4096 && brute_time < 5.0 && rank_time < 5.0;

    std::ostringstream detail;
    detail << "worked example: bruteforce " << brute.to_text() << " (" << brute_time
           << "s), rank matches=" << (rank == brute) << " (" << rank_time << "s), coeff sum "
           << brute.coeff_sum();

    if (!cli.empty()) {
        for (const char* method : {"bruteforce", "rank"}) {
            int code = 0;
            start = std::chrono::steady_clock::now();
            const std::string out = run_cli(
                "'" + cli + "' poly --method " + method + " -e '" + kExampleGraph + "'", &code);
            const double cli_time = seconds_since(start);
            const bool cli_ok = code == 0 && out == std::string(kExamplePoly) + "\n" && cli_time < 5.0;
            if (!cli_ok) pass = false;
            detail << "; cli " << method << (cli_ok ? " ok" : " WRONG") << " (" << cli_time << "s)";
        }
    } else {
        pass = false;
        detail << "; no CLI path given";
    }
    report(1, pass, detail.str());
}

// 2. Face-trace genus equals the auxiliary-bouquet rank for seeded random
//    connected graphs and two spanning trees each.
void criterion_genus_rank() {
    std::mt19937_64 rng(20250810);
    const auto start = std::chrono::steady_clock::now();
    int checked = 0;
    bool pass = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int lo = std::max(n - 1, 0);
        const int m = lo + static_cast<int>(rng() % (14 - lo + 1));
        const RibbonGraph g = random_connected_ribbon(rng, n, m);
        const int trace = g.euler_genus();
        for (const TreePolicy policy : {TreePolicy::dfs_ascending, TreePolicy::dfs_descending}) {
            const int rank = genus_via_rank(aux_bouquet(g, spanning_tree(g, policy)));
            if (rank != trace) pass = false;
            ++checked;
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "genus = aux-bouquet rank on 200 random graphs x 2 trees (" << checked
           << " checks, " << elapsed << "s)";
    report(2, pass && elapsed < 30.0, detail.str());
}

// 3. Rank decomposition equals brute force, independent of the spanning tree.
void criterion_poly_oracle() {
    std::mt19937_64 rng(912);
    bool pass = true;
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int lo = n - 1;
        const int m = lo + static_cast<int>(rng() % (12 - lo + 1));
        const RibbonGraph g = random_connected_ribbon(rng, n, m);
        const GenusPolynomial brute = petrial_poly_bruteforce(g);
        const GenusPolynomial r1 = petrial_poly_rank(g, spanning_tree(g));
        const GenusPolynomial r2 =
            petrial_poly_rank(g, spanning_tree(g, TreePolicy::dfs_descending));
        if (r1 != brute || r2 != brute) pass = false;
        ++checked;
    }
    report(3, pass, "rank engine = brute force on " + std::to_string(checked) +
                        " random graphs, both spanning trees");
}

// 4. Genus equals rank for every bouquet with at most four chords.
void criterion_bouquet_exhaustive() {
    bool pass = true;
    long long checked = 0;
    for (int m = 0; m <= 4; ++m) {
        testsupport::for_each_bouquet(m, [&](const Bouquet& b) {
            if (b.euler_genus() != genus_via_rank(b)) pass = false;
            ++checked;
        });
    }
    report(4, pass, "genus = rank for all " + std::to_string(checked) + " bouquets with <= 4 chords");
}

// 5. Four-term relation of the partial Petrial polynomial: exhaustive up to
//    five chords plus random eight-chord trials.
void criterion_four_term_chord() {
    bool pass = true;
    long long checked = 0;
    for (int m = 2; m <= 5; ++m) {
        testsupport::for_each_bouquet(m, [&](const Bouquet& b) {
            for (unsigned a : b.loop_labels())
                for (unsigned c : b.loop_labels()) {
                    if (a == c || !chords_adjacent(b, a, c)) continue;
                    if (!check_four_term_chord(b, a, c, true).is_zero()) pass = false;
                    ++checked;
                }
        });
    }
    std::mt19937_64 rng(5005);
    for (int trial = 0; trial < 100; ++trial) {
        const Bouquet b = random_bouquet(rng, 8);
        std::vector<std::pair<unsigned, unsigned>> pairs;
        for (unsigned a : b.loop_labels())
            for (unsigned c : b.loop_labels())
                if (a != c && chords_adjacent(b, a, c)) pairs.emplace_back(a, c);
        if (pairs.empty()) continue;
        const auto [a, c] = pairs[rng() % pairs.size()];
        if (!check_four_term_chord(b, a, c).is_zero()) pass = false;
        ++checked;
    }
    report(5, pass,
           "zero four-term residual over " + std::to_string(checked) +
               " (bouquet, ordered adjacent pair) cases");
}

// 6. Four-term relation of the modified polynomial on signed graphs:
//    exhaustive n <= 4 plus random n = 9 trials.
void criterion_four_term_graph() {
    bool pass = true;
    long long checked = 0;
    for (int n = 1; n <= 4; ++n) {
        testsupport::for_each_signed_graph(n, [&](const SignedGraph& s) {
            for (unsigned a = 1; a <= static_cast<unsigned>(n); ++a)
                for (unsigned b = 1; b <= static_cast<unsigned>(n); ++b) {
                    if (a == b) continue;
                    if (!check_four_term_signed_graph(s, a, b).is_zero()) pass = false;
                    ++checked;
                }
        });
    }
    std::mt19937_64 rng(6006);
    for (int trial = 0; trial < 100; ++trial) {
        const SignedGraph s = random_signed_graph(rng, 9);
        const unsigned a = 1 + static_cast<unsigned>(rng() % 9);
        unsigned b = 1 + static_cast<unsigned>(rng() % 9);
        while (b == a) b = 1 + static_cast<unsigned>(rng() % 9);
        if (!check_four_term_signed_graph(s, a, b).is_zero()) pass = false;
        ++checked;
    }
    report(6, pass,
           "modified polynomial is 4-invariant over " + std::to_string(checked) + " cases");
}

// 7. Structural properties: interpolation, coefficient sum, invariance under
//    pre-twists, join multiplicativity, and the retwisting sign relation.
void criterion_structure() {
    std::mt19937_64 rng(7007);
    bool pass = true;

    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int lo = std::max(n - 1, 1);
        const int m = lo + static_cast<int>(rng() % (10 - lo + 1));
        const RibbonGraph g = random_connected_ribbon(rng, n, m);
        const GenusPolynomial p = petrial_poly_bruteforce(g);
        if (!p.has_consecutive_support()) pass = false;
        if (p.coeff_sum() != (1ll << m)) pass = false;
        const EdgeSet a = rng() & ((EdgeSet{1} << m) - 1);
        if (petrial_poly_bruteforce(g.partial_petrial(a)) != p) pass = false;
    }

    for (int trial = 0; trial < 50; ++trial) {
        const Bouquet b1 = random_bouquet(rng, static_cast<int>(rng() % 7));
        const Bouquet b2 = random_bouquet(rng, static_cast<int>(rng() % 7));
        if (petrial_poly_bruteforce(join(b1, b2).to_graph()) !=
            petrial_poly_bruteforce(b1.to_graph()) * petrial_poly_bruteforce(b2.to_graph()))
            pass = false;
    }

    for (int trial = 0; trial < 50; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const Bouquet b = random_bouquet(rng, m);
        const EdgeSet w = rng() & ((EdgeSet{1} << m) - 1);
        GenusPolynomial rhs = modified_poly_bouquet(b.partial_petrial(w));
        if (edge_set_size(w) % 2 == 1) rhs = -rhs;
        if (modified_poly_bouquet(b) != rhs) pass = false;
    }

    report(7, pass,
           "interpolation, coefficient sum 2^m, pre-twist invariance, join multiplicativity "
           "(50 pairs), retwist sign relation");
}

// 8. Performance report (non-blocking): rank-method polynomial at m = 26,
//    n = 6 with all cores.
void criterion_performance() {
    std::mt19937_64 rng(8008);
    const RibbonGraph g = random_connected_ribbon(rng, 6, 26);
    const auto start = std::chrono::steady_clock::now();
    const GenusPolynomial p = petrial_poly_rank(g, spanning_tree(g), 30, 0);
    const double elapsed = seconds_since(start);
    const double ranks = static_cast<double>(1ull << 26);
    std::ostringstream detail;
    detail << "rank method at m=26, n=6: " << elapsed << "s on "
           << std::thread::hardware_concurrency() << " core(s), "
           << static_cast<long long>(ranks / elapsed) << " ranks/s, coeff sum ok="
           << (p.coeff_sum() == (1ll << 26));
    // reported, and expected to land well under the ten-minute target
    report(8, elapsed < 600.0 && p.coeff_sum() == (1ll << 26), detail.str());
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion_worked_example(cli);
    criterion_genus_rank();
    criterion_poly_oracle();
    criterion_bouquet_exhaustive();
    criterion_four_term_chord();
    criterion_four_term_graph();
    criterion_structure();
    criterion_performance();
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
