// petrial: Euler genus and partial Petrial polynomials of ribbon graphs.
//
// The CLI is a thin client of the shared library's C interface; all graph
// and polynomial work happens behind the opaque handles of petrial.h.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "petrial.h"

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Handle wrappers

struct GraphDeleter {
    void operator()(petrial_graph* g) const { petrial_graph_free(g); }
};
struct SgraphDeleter {
    void operator()(petrial_sgraph* s) const { petrial_sgraph_free(s); }
};
struct PolyDeleter {
    void operator()(petrial_poly* p) const { petrial_poly_free(p); }
};
using Graph = std::unique_ptr<petrial_graph, GraphDeleter>;
using Sgraph = std::unique_ptr<petrial_sgraph, SgraphDeleter>;
using Poly = std::unique_ptr<petrial_poly, PolyDeleter>;

[[noreturn]] void die(const std::string& message, int code = 1) {
    std::cerr << "petrial: " << message << "\n";
    std::exit(code);
}

void require_ok(petrial_status status) {
    if (status == PETRIAL_OK) return;
    die(petrial_last_error(), status == PETRIAL_ERR_LIMIT ? 2 : 1);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    petrial_string_free(s);
    return out;
}

std::string poly_text(const petrial_poly* p) {
    char* s = nullptr;
    require_ok(petrial_poly_format(p, &s));
    return take_string(s);
}

json poly_coeff_map(const petrial_poly* p) {
    json coeffs = json::object();
    for (int e = std::max(petrial_poly_min_degree(p), 0); e <= petrial_poly_degree(p); ++e) {
        const int64_t c = petrial_poly_coeff(p, e);
        if (c != 0) coeffs[std::to_string(e)] = c;
    }
    return coeffs;
}

// ---------------------------------------------------------------------------
// Input handling

struct InputOptions {
    std::string path;   // file path or "-" for stdin
    std::string inline_text;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "input file, or - for stdin");
    cmd->add_option("-e,--expr", in.inline_text, "inline input text");
}

std::string load_input(const InputOptions& in) {
    if (!in.inline_text.empty()) {
        if (!in.path.empty()) die("give either an input file or --expr, not both");
        return in.inline_text;
    }
    if (in.path.empty()) die("no input given (file path, '-' or --expr)");
    if (in.path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(in.path);
    if (!file) die("cannot open '" + in.path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

enum class InputKind { rotation, chord, signed_graph };

InputKind sniff_kind(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.find("signs:") != std::string::npos) return InputKind::signed_graph;
        if (line.find(':') != std::string::npos) return InputKind::rotation;
        return InputKind::chord;
    }
    return InputKind::chord;
}

Graph graph_from_text(const std::string& text) {
    petrial_graph* g = nullptr;
    switch (sniff_kind(text)) {
    case InputKind::rotation:
        require_ok(petrial_graph_parse(text.c_str(), &g));
        break;
    case InputKind::chord:
        require_ok(petrial_chord_parse(text.c_str(), &g));
        break;
    case InputKind::signed_graph:
        die("this command expects a ribbon graph, not a signed graph");
    }
    return Graph(g);
}

Graph load_graph(const InputOptions& in) { return graph_from_text(load_input(in)); }

std::vector<uint32_t> parse_tree_list(const std::string& spec) {
    std::vector<uint32_t> edges;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            const long v = std::stol(item);
            if (v <= 0) throw std::invalid_argument("");
            edges.push_back(static_cast<uint32_t>(v));
        } catch (...) {
            die("bad --tree entry '" + item + "'");
        }
    }
    return edges;
}

std::vector<uint32_t> default_tree(const petrial_graph* g, int variant) {
    std::vector<uint32_t> tree(64);
    int32_t len = 64;
    require_ok(petrial_graph_spanning_tree(g, variant, tree.data(), &len));
    tree.resize(len);
    return tree;
}

// ---------------------------------------------------------------------------
// Commands

struct CommonOptions {
    std::string format = "text";
    std::string tree_spec;
    int threads = 0;
    int max_size = 0;
    bool force = false;
};

int effective_cap(const CommonOptions& opt) {
    if (opt.force) return 63;
    return opt.max_size; // 0 lets the library defaults apply
}

int cmd_genus(const InputOptions& in, const CommonOptions& opt) {
    const Graph g = load_graph(in);
    int32_t comp = 0;
    require_ok(petrial_graph_connected_components(g.get(), &comp));
    if (comp != 1) die("graph must be connected");

    int32_t faces = 0, trace = 0, rank = 0;
    require_ok(petrial_graph_boundary_components(g.get(), &faces));
    require_ok(petrial_graph_euler_genus(g.get(), &trace));
    std::vector<uint32_t> tree =
        opt.tree_spec.empty() ? default_tree(g.get(), 0) : parse_tree_list(opt.tree_spec);
    require_ok(petrial_graph_genus_via_rank(g.get(), tree.data(),
                                            static_cast<int32_t>(tree.size()), &rank));
    const bool agree = trace == rank;

    if (opt.format == "json") {
        json out{{"vertices", petrial_graph_vertices(g.get())},
                 {"edges", petrial_graph_edges(g.get())},
                 {"boundary_components", faces},
                 {"euler_genus", trace},
                 {"rank_genus", rank},
                 {"agree", agree}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "vertices: " << petrial_graph_vertices(g.get()) << "\n"
                  << "edges: " << petrial_graph_edges(g.get()) << "\n"
                  << "boundary components: " << faces << "\n"
                  << "euler genus (boundary trace): " << trace << "\n"
                  << "euler genus (aux-bouquet rank): " << rank << "\n"
                  << (agree ? "methods agree" : "METHODS DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_poly(const InputOptions& in, const CommonOptions& opt, const std::string& method,
             bool modified) {
    const std::string text = load_input(in);
    const InputKind kind = sniff_kind(text);

    if (modified) {
        Poly p;
        std::string method_name;
        int size = 0;
        if (kind == InputKind::signed_graph) {
            petrial_sgraph* s = nullptr;
            require_ok(petrial_sgraph_parse(text.c_str(), &s));
            const Sgraph sg(s);
            petrial_poly* raw = nullptr;
            require_ok(petrial_poly_modified_sgraph(sg.get(), &raw));
            p.reset(raw);
            method_name = "modified-signed-graph";
            size = petrial_sgraph_vertices(sg.get());
        } else {
            petrial_graph* g = nullptr;
            if (kind == InputKind::rotation)
                require_ok(petrial_graph_parse(text.c_str(), &g));
            else
                require_ok(petrial_chord_parse(text.c_str(), &g));
            const Graph gg(g);
            if (!petrial_graph_is_bouquet(gg.get()))
                die("--modified expects a bouquet (one vertex) or a signed-graph file");
            petrial_poly* raw = nullptr;
            require_ok(petrial_poly_modified_bouquet(gg.get(), &raw));
            p.reset(raw);
            method_name = "modified";
            size = petrial_graph_edges(gg.get());
        }
        if (opt.format == "json") {
            json out{{"poly", poly_coeff_map(p.get())},
                     {"edges", size},
                     {"method", method_name},
                     {"coeff_sum", petrial_poly_coeff_sum(p.get())}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << poly_text(p.get()) << "\n";
        }
        return 0;
    }

    const Graph g = graph_from_text(text);
    const int cap = effective_cap(opt);
    const int m = petrial_graph_edges(g.get());

    auto run_brute = [&] {
        petrial_poly* raw = nullptr;
        require_ok(petrial_poly_bruteforce(g.get(), cap, opt.threads, &raw));
        return Poly(raw);
    };
    auto run_rank = [&] {
        petrial_poly* raw = nullptr;
        std::vector<uint32_t> tree;
        const uint32_t* tree_ptr = nullptr;
        int32_t tree_len = 0;
        if (!opt.tree_spec.empty()) {
            tree = parse_tree_list(opt.tree_spec);
            tree_ptr = tree.data();
            tree_len = static_cast<int32_t>(tree.size());
        }
        require_ok(petrial_poly_rank(g.get(), tree_ptr, tree_len, cap, opt.threads, &raw));
        return Poly(raw);
    };

    Poly poly;
    bool agree = true;
    if (method == "bruteforce") {
        poly = run_brute();
    } else if (method == "rank") {
        poly = run_rank();
    } else if (method == "both") {
        Poly brute = run_brute();
        Poly rank = run_rank();
        agree = petrial_poly_equal(brute.get(), rank.get()) == 1;
        if (opt.format != "json") {
            std::cout << "bruteforce: " << poly_text(brute.get()) << "\n"
                      << "rank:       " << poly_text(rank.get()) << "\n"
                      << (agree ? "methods agree" : "METHODS DISAGREE") << "\n";
            return agree ? 0 : 1;
        }
        poly = std::move(brute);
    } else {
        die("unknown --method '" + method + "' (rank, bruteforce or both)");
    }

    if (opt.format == "json") {
        json out{{"poly", poly_coeff_map(poly.get())},
                 {"edges", m},
                 {"method", method},
                 {"coeff_sum", petrial_poly_coeff_sum(poly.get())}};
        if (method == "both") out["agree"] = agree;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << poly_text(poly.get()) << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_aux(const InputOptions& in, const CommonOptions& opt) {
    const Graph g = load_graph(in);
    std::vector<uint32_t> tree =
        opt.tree_spec.empty() ? default_tree(g.get(), 0) : parse_tree_list(opt.tree_spec);
    petrial_graph* raw = nullptr;
    require_ok(
        petrial_graph_aux_bouquet(g.get(), tree.data(), static_cast<int32_t>(tree.size()), &raw));
    const Graph aux(raw);

    char* chord = nullptr;
    require_ok(petrial_chord_serialize(aux.get(), &chord));
    const std::string chord_text = take_string(chord);

    if (opt.format == "json") {
        int32_t rank = 0;
        require_ok(petrial_graph_genus_via_rank(aux.get(), nullptr, 0, &rank));
        json out{{"bouquet", chord_text},
                 {"loops", petrial_graph_edges(aux.get())},
                 {"tree", tree},
                 {"genus", rank}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << chord_text << "\n";
    }
    return 0;
}

int cmd_contract(const InputOptions& in, const CommonOptions& opt, uint32_t edge) {
    const Graph g = load_graph(in);
    petrial_graph* raw = nullptr;
    require_ok(petrial_graph_contract_edge(g.get(), edge, &raw));
    const Graph contracted(raw);
    char* text = nullptr;
    require_ok(petrial_graph_serialize(contracted.get(), &text));
    const std::string serialized = take_string(text);
    if (opt.format == "json") {
        json out{{"graph", serialized},
                 {"vertices", petrial_graph_vertices(contracted.get())},
                 {"edges", petrial_graph_edges(contracted.get())}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << serialized;
    }
    return 0;
}

int cmd_random(const std::string& kind, int size, int vertices, uint64_t seed) {
    if (kind == "bouquet") {
        petrial_graph* g = nullptr;
        require_ok(petrial_random_bouquet(seed, size, &g));
        const Graph h(g);
        char* text = nullptr;
        require_ok(petrial_chord_serialize(h.get(), &text));
        std::cout << take_string(text) << "\n";
    } else if (kind == "ribbon") {
        if (vertices <= 0) vertices = std::max(2, size / 2);
        petrial_graph* g = nullptr;
        require_ok(petrial_random_ribbon(seed, vertices, size, &g));
        const Graph h(g);
        char* text = nullptr;
        require_ok(petrial_graph_serialize(h.get(), &text));
        std::cout << take_string(text);
    } else if (kind == "signed-graph") {
        petrial_sgraph* s = nullptr;
        require_ok(petrial_random_sgraph(seed, size, &s));
        const Sgraph h(s);
        char* text = nullptr;
        require_ok(petrial_sgraph_serialize(h.get(), &text));
        std::cout << take_string(text);
    } else {
        die("unknown --kind '" + kind + "' (bouquet, ribbon or signed-graph)");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check / four-term harnesses

struct CheckReport {
    int passed = 0;
    int failed = 0;

    void note(bool ok, const std::function<void()>& describe) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            describe();
        }
    }
};

Graph random_bouquet_handle(uint64_t seed, int loops) {
    petrial_graph* g = nullptr;
    require_ok(petrial_random_bouquet(seed, loops, &g));
    return Graph(g);
}

Graph random_ribbon_handle(uint64_t seed, int vertices, int edges) {
    petrial_graph* g = nullptr;
    require_ok(petrial_random_ribbon(seed, vertices, edges, &g));
    return Graph(g);
}

Sgraph random_sgraph_handle(uint64_t seed, int vertices) {
    petrial_sgraph* s = nullptr;
    require_ok(petrial_random_sgraph(seed, vertices, &s));
    return Sgraph(s);
}

std::string graph_text(const petrial_graph* g) {
    char* s = nullptr;
    require_ok(petrial_graph_serialize(g, &s));
    return take_string(s);
}

std::string sgraph_text(const petrial_sgraph* s) {
    char* t = nullptr;
    require_ok(petrial_sgraph_serialize(s, &t));
    return take_string(t);
}

// all perfect matchings of 2m points as label sequences
void for_each_matching(int m, const std::function<void(const std::vector<int32_t>&)>& f) {
    std::vector<int32_t> seq(2 * m, 0);
    std::function<void(int)> place = [&](int next_label) {
        int first = -1;
        for (int i = 0; i < 2 * m; ++i)
            if (seq[i] == 0) {
                first = i;
                break;
            }
        if (first < 0) {
            f(seq);
            return;
        }
        seq[first] = next_label;
        for (int j = first + 1; j < 2 * m; ++j) {
            if (seq[j] != 0) continue;
            seq[j] = next_label;
            place(next_label + 1);
            seq[j] = 0;
        }
        seq[first] = 0;
    };
    place(1);
}

// every bouquet with m chords: matchings x framings (negate the second end)
void for_each_bouquet(int m, const std::function<void(const petrial_graph*)>& f) {
    for_each_matching(m, [&](const std::vector<int32_t>& matching) {
        for (uint64_t framing = 0; framing < (uint64_t{1} << m); ++framing) {
            std::vector<int32_t> seq = matching;
            std::vector<bool> seen(m + 1, false);
            for (auto& v : seq) {
                if (seen[v] && (framing >> (v - 1)) & 1u) v = -v;
                seen[std::abs(v)] = true;
            }
            petrial_graph* g = nullptr;
            require_ok(petrial_chord_from_sequence(seq.data(), static_cast<int32_t>(seq.size()), &g));
            const Graph h(g);
            f(h.get());
        }
    });
}

void check_genus_rank(CheckReport& report, std::mt19937_64& rng, int trials, int max_edges) {
    for (int t = 0; t < trials; ++t) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int lo = std::max(n - 1, 0);
        const int m = lo + static_cast<int>(rng() % std::max(1, max_edges - lo + 1));
        const Graph g = random_ribbon_handle(rng(), n, m);
        int32_t trace = 0;
        require_ok(petrial_graph_euler_genus(g.get(), &trace));
        for (int variant = 0; variant < 2; ++variant) {
            const auto tree = default_tree(g.get(), variant);
            int32_t rank = 0;
            require_ok(petrial_graph_genus_via_rank(g.get(), tree.data(),
                                                    static_cast<int32_t>(tree.size()), &rank));
            report.note(trace == rank, [&] {
                std::cout << "FAIL genus-rank: trace=" << trace << " rank=" << rank << "\n"
                          << graph_text(g.get());
            });
        }
    }
}

void check_poly_oracle(CheckReport& report, std::mt19937_64& rng, int trials, int max_edges,
                       int threads) {
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int lo = n - 1;
        const int m = lo + static_cast<int>(rng() % std::max(1, max_edges - lo + 1));
        const Graph g = random_ribbon_handle(rng(), n, m);
        petrial_poly* braw = nullptr;
        require_ok(petrial_poly_bruteforce(g.get(), 0, threads, &braw));
        const Poly brute(braw);
        for (int variant = 0; variant < 2; ++variant) {
            const auto tree = default_tree(g.get(), variant);
            petrial_poly* rraw = nullptr;
            require_ok(petrial_poly_rank(g.get(), tree.data(), static_cast<int32_t>(tree.size()),
                                         0, threads, &rraw));
            const Poly rank(rraw);
            report.note(petrial_poly_equal(brute.get(), rank.get()) == 1, [&] {
                std::cout << "FAIL poly-oracle: bruteforce=" << poly_text(brute.get())
                          << " rank=" << poly_text(rank.get()) << "\n"
                          << graph_text(g.get());
            });
        }
    }
}

void check_bouquet_rank(CheckReport& report, std::mt19937_64& rng, int trials, int max_chords) {
    for (int m = 0; m <= std::min(max_chords, 4); ++m) {
        for_each_bouquet(m, [&](const petrial_graph* b) {
            int32_t trace = 0, rank = 0;
            require_ok(petrial_graph_euler_genus(b, &trace));
            require_ok(petrial_graph_genus_via_rank(b, nullptr, 0, &rank));
            report.note(trace == rank, [&] {
                std::cout << "FAIL bouquet-rank: trace=" << trace << " rank=" << rank << "\n"
                          << graph_text(b);
            });
        });
    }
    for (int t = 0; t < trials; ++t) {
        const Graph b = random_bouquet_handle(rng(), 1 + static_cast<int>(rng() % 10));
        int32_t trace = 0, rank = 0;
        require_ok(petrial_graph_euler_genus(b.get(), &trace));
        require_ok(petrial_graph_genus_via_rank(b.get(), nullptr, 0, &rank));
        report.note(trace == rank, [&] {
            std::cout << "FAIL bouquet-rank: trace=" << trace << " rank=" << rank << "\n"
                      << graph_text(b.get());
        });
    }
}

void residual_trial(CheckReport& report, const petrial_graph* b, uint32_t x, uint32_t y,
                    bool modified, bool sweep_all, bool print_each, int trial) {
    petrial_poly* raw = nullptr;
    if (modified)
        require_ok(petrial_four_term_modified(b, x, y, sweep_all ? 1 : 0, &raw));
    else
        require_ok(petrial_four_term_chord(b, x, y, sweep_all ? 1 : 0, &raw));
    const Poly residual(raw);
    const bool ok = petrial_poly_degree(residual.get()) < 0;
    if (print_each)
        std::cout << "trial " << trial << " (" << x << "," << y << "): "
                  << (ok ? "ok" : "FAIL residual = " + poly_text(residual.get())) << "\n";
    report.note(ok, [&] {
        if (!print_each)
            std::cout << "FAIL four-term residual = " << poly_text(residual.get()) << "\n";
        std::cout << graph_text(b);
    });
}

// picks a uniformly random adjacent ordered chord pair, if any
bool random_adjacent_pair(std::mt19937_64& rng, const petrial_graph* b, int loops, uint32_t* x,
                          uint32_t* y) {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (int i = 1; i <= loops; ++i)
        for (int j = 1; j <= loops; ++j) {
            if (i == j) continue;
            int32_t adjacent = 0;
            require_ok(petrial_chords_adjacent(b, i, j, &adjacent));
            if (adjacent) pairs.emplace_back(i, j);
        }
    if (pairs.empty()) return false;
    const auto [a, c] = pairs[rng() % pairs.size()];
    *x = a;
    *y = c;
    return true;
}

void check_four_term_chords(CheckReport& report, std::mt19937_64& rng, int trials, int max_chords,
                            bool modified, bool sweep_all, bool print_each) {
    for (int m = 2; m <= std::min(max_chords, 5); ++m) {
        for_each_bouquet(m, [&](const petrial_graph* b) {
            for (uint32_t x = 1; x <= static_cast<uint32_t>(m); ++x)
                for (uint32_t y = 1; y <= static_cast<uint32_t>(m); ++y) {
                    if (x == y) continue;
                    int32_t adjacent = 0;
                    require_ok(petrial_chords_adjacent(b, x, y, &adjacent));
                    if (!adjacent) continue;
                    residual_trial(report, b, x, y, modified, true, false, 0);
                }
        });
    }
    const int loops = std::max(max_chords, 2);
    for (int t = 0; t < trials; ++t) {
        const Graph b = random_bouquet_handle(rng(), loops);
        uint32_t x = 0, y = 0;
        if (!random_adjacent_pair(rng, b.get(), loops, &x, &y)) continue;
        residual_trial(report, b.get(), x, y, modified, sweep_all, print_each, t + 1);
    }
}

void check_four_term_graphs(CheckReport& report, std::mt19937_64& rng, int trials,
                            int exhaustive_max, int random_n, bool print_each) {
    // exhaustive over all signed graphs with up to exhaustive_max (<= 4) vertices
    for (int n = 2; n <= std::min(exhaustive_max, 4); ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint64_t edges = 0; edges < (uint64_t{1} << pairs); ++edges) {
            for (uint64_t signs = 0; signs < (uint64_t{1} << n); ++signs) {
                std::vector<int8_t> sign_list(n, 1);
                for (int i = 0; i < n; ++i)
                    if ((signs >> i) & 1u) sign_list[i] = -1;
                std::vector<uint32_t> edge_list;
                int bit = 0;
                for (uint32_t i = 1; i <= static_cast<uint32_t>(n); ++i)
                    for (uint32_t j = i + 1; j <= static_cast<uint32_t>(n); ++j, ++bit)
                        if ((edges >> bit) & 1u) {
                            edge_list.push_back(i);
                            edge_list.push_back(j);
                        }
                petrial_sgraph* raw = nullptr;
                require_ok(petrial_sgraph_create(n, sign_list.data(), edge_list.data(),
                                                 static_cast<int32_t>(edge_list.size() / 2), &raw));
                const Sgraph s(raw);
                for (uint32_t a = 1; a <= static_cast<uint32_t>(n); ++a)
                    for (uint32_t b = 1; b <= static_cast<uint32_t>(n); ++b) {
                        if (a == b) continue;
                        petrial_poly* rraw = nullptr;
                        require_ok(petrial_four_term_sgraph(s.get(), a, b, &rraw));
                        const Poly residual(rraw);
                        report.note(petrial_poly_degree(residual.get()) < 0, [&] {
                            std::cout << "FAIL four-term-graph residual = "
                                      << poly_text(residual.get()) << "\n"
                                      << sgraph_text(s.get());
                        });
                    }
            }
        }
    }
    const int n = std::max(random_n, 2);
    for (int t = 0; t < trials; ++t) {
        const Sgraph s = random_sgraph_handle(rng(), n);
        const uint32_t a = 1 + static_cast<uint32_t>(rng() % n);
        uint32_t b = 1 + static_cast<uint32_t>(rng() % n);
        while (b == a) b = 1 + static_cast<uint32_t>(rng() % n);
        petrial_poly* rraw = nullptr;
        require_ok(petrial_four_term_sgraph(s.get(), a, b, &rraw));
        const Poly residual(rraw);
        const bool ok = petrial_poly_degree(residual.get()) < 0;
        if (print_each)
            std::cout << "trial " << t + 1 << " (" << a << "," << b << "): "
                      << (ok ? "ok" : "FAIL residual = " + poly_text(residual.get())) << "\n";
        report.note(ok, [&] {
            if (!print_each)
                std::cout << "FAIL four-term-graph residual = " << poly_text(residual.get())
                          << "\n";
            std::cout << sgraph_text(s.get());
        });
    }
}

void check_join(CheckReport& report, std::mt19937_64& rng, int trials, int max_chords) {
    for (int t = 0; t < trials; ++t) {
        const int m1 = static_cast<int>(rng() % std::max(1, max_chords / 2 + 1));
        const int m2 = static_cast<int>(rng() % std::max(1, max_chords / 2 + 1));
        const Graph b1 = random_bouquet_handle(rng(), m1);
        const Graph b2 = random_bouquet_handle(rng(), m2);
        petrial_graph* jraw = nullptr;
        require_ok(petrial_bouquet_join(b1.get(), b2.get(), &jraw));
        const Graph joined(jraw);

        petrial_poly *p1 = nullptr, *p2 = nullptr, *pj = nullptr, *prod = nullptr;
        require_ok(petrial_poly_bruteforce(b1.get(), 0, 1, &p1));
        const Poly h1(p1);
        require_ok(petrial_poly_bruteforce(b2.get(), 0, 1, &p2));
        const Poly h2(p2);
        require_ok(petrial_poly_bruteforce(joined.get(), 0, 1, &pj));
        const Poly hj(pj);
        require_ok(petrial_poly_mul(h1.get(), h2.get(), &prod));
        const Poly hp(prod);
        report.note(petrial_poly_equal(hj.get(), hp.get()) == 1, [&] {
            std::cout << "FAIL join: product " << poly_text(hp.get()) << " vs "
                      << poly_text(hj.get()) << "\n"
                      << graph_text(joined.get());
        });
    }
}

void check_invariance(CheckReport& report, std::mt19937_64& rng, int trials, int max_edges) {
    for (int t = 0; t < trials; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int lo = std::max(n - 1, 1);
        const int m = lo + static_cast<int>(rng() % std::max(1, std::min(max_edges, 10) - lo + 1));
        const Graph g = random_ribbon_handle(rng(), n, m);

        petrial_poly* raw = nullptr;
        require_ok(petrial_poly_bruteforce(g.get(), 0, 1, &raw));
        const Poly base(raw);

        // interpolation: consecutive nonzero coefficients
        bool consecutive = true;
        for (int e = petrial_poly_min_degree(base.get()); e <= petrial_poly_degree(base.get()); ++e)
            if (petrial_poly_coeff(base.get(), e) == 0) consecutive = false;
        report.note(consecutive, [&] {
            std::cout << "FAIL interpolation: " << poly_text(base.get()) << "\n"
                      << graph_text(g.get());
        });

        // coefficient sum is 2^m
        report.note(petrial_poly_coeff_sum(base.get()) == (int64_t{1} << m), [&] {
            std::cout << "FAIL coefficient sum: " << poly_text(base.get()) << "\n"
                      << graph_text(g.get());
        });

        // pre-twisting any subset leaves the polynomial unchanged
        std::vector<uint32_t> subset;
        for (uint32_t e = 1; e <= static_cast<uint32_t>(m); ++e)
            if (rng() & 1u) subset.push_back(e);
        petrial_graph* traw = nullptr;
        require_ok(petrial_graph_partial_petrial(g.get(), subset.data(),
                                                 static_cast<int32_t>(subset.size()), &traw));
        const Graph twisted(traw);
        petrial_poly* praw = nullptr;
        require_ok(petrial_poly_bruteforce(twisted.get(), 0, 1, &praw));
        const Poly twisted_poly(praw);
        report.note(petrial_poly_equal(base.get(), twisted_poly.get()) == 1, [&] {
            std::cout << "FAIL petrial invariance\n" << graph_text(g.get());
        });
    }

    // modified polynomial changes by (-1)^|W| under retwisting W
    for (int t = 0; t < trials; ++t) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const Graph b = random_bouquet_handle(rng(), m);
        std::vector<uint32_t> subset;
        for (uint32_t e = 1; e <= static_cast<uint32_t>(m); ++e)
            if (rng() & 1u) subset.push_back(e);
        petrial_graph* traw = nullptr;
        require_ok(petrial_graph_partial_petrial(b.get(), subset.data(),
                                                 static_cast<int32_t>(subset.size()), &traw));
        const Graph retwisted(traw);

        petrial_poly *raw1 = nullptr, *raw2 = nullptr;
        require_ok(petrial_poly_modified_bouquet(b.get(), &raw1));
        const Poly lhs(raw1);
        require_ok(petrial_poly_modified_bouquet(retwisted.get(), &raw2));
        const Poly rhs(raw2);

        const int64_t sign = (subset.size() % 2 == 0) ? 1 : -1;
        bool ok = true;
        const int hi = std::max(petrial_poly_degree(lhs.get()), petrial_poly_degree(rhs.get()));
        for (int e = 0; e <= hi; ++e)
            if (petrial_poly_coeff(lhs.get(), e) != sign * petrial_poly_coeff(rhs.get(), e))
                ok = false;
        report.note(ok, [&] {
            std::cout << "FAIL sign relation: " << poly_text(lhs.get()) << " vs "
                      << poly_text(rhs.get()) << " with |W|=" << subset.size() << "\n"
                      << graph_text(b.get());
        });
    }
}

int cmd_check(const std::string& mode, int trials, uint64_t seed, int max_size, int threads,
              const std::string& format) {
    std::mt19937_64 rng(seed);
    CheckReport report;
    json modes = json::array();

    auto run = [&](const std::string& name, const std::function<void()>& body) {
        if (mode != "all" && mode != name) return;
        const int before_pass = report.passed, before_fail = report.failed;
        body();
        const int pass = report.passed - before_pass, fail = report.failed - before_fail;
        if (format == "json")
            modes.push_back(json{{"mode", name}, {"passed", pass}, {"failed", fail}});
        else
            std::cout << name << ": " << pass << " passed, " << fail << " failed\n";
    };

    run("genus-rank", [&] { check_genus_rank(report, rng, trials, max_size ? max_size : 14); });
    run("poly-oracle",
        [&] { check_poly_oracle(report, rng, trials, max_size ? max_size : 12, threads); });
    run("bouquet-rank", [&] { check_bouquet_rank(report, rng, trials, max_size ? max_size : 4); });
    run("four-term-chord", [&] {
        check_four_term_chords(report, rng, trials, max_size ? max_size : 4, false, true, false);
    });
    run("four-term-modified", [&] {
        check_four_term_chords(report, rng, trials, max_size ? max_size : 4, true, true, false);
    });
    run("four-term-graph", [&] {
        check_four_term_graphs(report, rng, trials, max_size ? max_size : 4, 9, false);
    });
    run("join", [&] { check_join(report, rng, trials, max_size ? max_size : 8); });
    run("invariance", [&] { check_invariance(report, rng, trials, max_size ? max_size : 10); });

    if (report.passed + report.failed == 0)
        die("unknown --mode '" + mode +
            "' (genus-rank, poly-oracle, bouquet-rank, four-term-chord, four-term-modified, "
            "four-term-graph, join, invariance or all)");

    if (format == "json") {
        json out{{"modes", modes}, {"passed", report.passed}, {"failed", report.failed}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "total: " << report.passed << " passed, " << report.failed << " failed\n";
    }
    return report.failed == 0 ? 0 : 1;
}

int cmd_four_term(const std::string& mode, int trials, uint64_t seed, int max_size,
                  bool all_witnesses) {
    std::mt19937_64 rng(seed);
    CheckReport report;
    if (mode == "chord" || mode == "modified") {
        const int chords = max_size ? max_size : 8;
        for (int t = 0; t < trials; ++t) {
            const Graph b = random_bouquet_handle(rng(), std::max(chords, 2));
            uint32_t x = 0, y = 0;
            if (!random_adjacent_pair(rng, b.get(), std::max(chords, 2), &x, &y)) continue;
            residual_trial(report, b.get(), x, y, mode == "modified", all_witnesses, true, t + 1);
        }
    } else if (mode == "graph") {
        check_four_term_graphs(report, rng, trials, 0, max_size ? max_size : 9, true);
    } else {
        die("unknown --mode '" + mode + "' (chord, graph or modified)");
    }
    std::cout << report.passed << " passed, " << report.failed << " failed\n";
    return report.failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler genus and partial Petrial polynomials of ribbon graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(petrial_version()));

    InputOptions in;
    CommonOptions opt;
    std::string method = "both";
    bool modified = false;
    uint32_t edge = 0;
    std::string kind = "bouquet";
    int size = 6;
    int vertices = 0;
    uint64_t seed = 1;
    int trials = 100;
    std::string mode = "all";
    bool all_witnesses = false;

    auto add_common = [&](CLI::App* cmd, bool with_tree = true) {
        cmd->add_option("-f,--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_tree)
            cmd->add_option("-t,--tree", opt.tree_spec, "spanning-tree edges, e.g. 1,4,7");
    };

    CLI::App* genus = app.add_subcommand("genus", "Euler genus by boundary tracing and by rank");
    add_input_options(genus, in);
    add_common(genus);

    CLI::App* poly = app.add_subcommand("poly", "partial Petrial polynomial");
    add_input_options(poly, in);
    add_common(poly);
    poly->add_option("-m,--method", method, "rank, bruteforce or both");
    poly->add_flag("--modified", modified, "modified (sign-alternating) polynomial");
    poly->add_option("--max-size", opt.max_size, "edge cap override");
    poly->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
    poly->add_flag("--force", opt.force, "lift the work-estimate guardrail");

    CLI::App* aux = app.add_subcommand("aux", "auxiliary bouquet of a spanning tree");
    add_input_options(aux, in);
    add_common(aux);

    CLI::App* contract = app.add_subcommand("contract", "contract a non-loop edge");
    add_input_options(contract, in);
    add_common(contract);
    contract->add_option("-E,--edge", edge, "edge label to contract")->required();

    CLI::App* check = app.add_subcommand("check", "verify the structural identities");
    check->add_option("--mode", mode,
                      "genus-rank, poly-oracle, bouquet-rank, four-term-chord, "
                      "four-term-modified, four-term-graph, join, invariance or all");
    check->add_option("-r,--random", trials, "randomized trials per mode");
    check->add_option("-s,--seed", seed, "random seed");
    check->add_option("--max-size", opt.max_size, "instance size bound");
    check->add_option("--threads", opt.threads, "worker threads");
    check->add_option("-f,--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* four = app.add_subcommand("four-term", "four-term relation trials");
    four->add_option("--mode", mode, "chord, graph or modified")->required();
    four->add_option("-r,--random", trials, "number of trials");
    four->add_option("-s,--seed", seed, "random seed");
    four->add_option("--max-size", opt.max_size, "chords / vertices per instance");
    four->add_flag("--all-witnesses", all_witnesses, "check every adjacency witness");

    CLI::App* random = app.add_subcommand("random", "sample a random instance");
    random->add_option("-k,--kind", kind, "bouquet, ribbon or signed-graph")->required();
    random->add_option("--size", size, "edges (bouquet/ribbon) or vertices (signed-graph)");
    random->add_option("--vertices", vertices, "vertex count for ribbon graphs");
    random->add_option("-s,--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    if (genus->parsed()) return cmd_genus(in, opt);
    if (poly->parsed()) return cmd_poly(in, opt, method, modified);
    if (aux->parsed()) return cmd_aux(in, opt);
    if (contract->parsed()) return cmd_contract(in, opt, edge);
    if (check->parsed())
        return cmd_check(mode, trials, seed, opt.max_size, opt.threads, opt.format);
    if (four->parsed()) return cmd_four_term(mode, trials, seed, opt.max_size, all_witnesses);
    if (random->parsed()) return cmd_random(kind, size, vertices, seed);
    return 0;
}
