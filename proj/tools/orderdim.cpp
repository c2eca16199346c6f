// orderdim: construct and verify 4-extension realizers for adjacency posets
// of outerplanar graphs, and compute exact poset dimension.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "orderdim/orderdim.hpp"

namespace od = orderdim;

namespace {

constexpr int EXIT_PARSE = 1;
constexpr int EXIT_INFEASIBLE = 2;
constexpr int EXIT_VERIFY = 3;
constexpr int EXIT_BUDGET = 4;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw od::parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// split a piped stream into header-labelled sections; an unlabelled stream is
// treated as a single section with the given default header
std::vector<std::pair<std::string, std::string>> sections(const std::string& text,
                                                          const std::string& dflt) {
    static const std::vector<std::string> headers = {"graph", "poset", "embedding",
                                                     "realizer"};
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::string cur_header, cur_body;
    auto flush = [&]() {
        if (!cur_header.empty() || !cur_body.empty())
            out.emplace_back(cur_header.empty() ? dflt : cur_header, cur_body);
        cur_header.clear();
        cur_body.clear();
    };
    while (std::getline(in, line)) {
        bool is_header = std::find(headers.begin(), headers.end(), line) != headers.end();
        if (is_header) {
            flush();
            cur_header = line;
        } else {
            cur_body += line;
            cur_body += "\n";
        }
    }
    flush();
    return out;
}

const std::string& find_section(
    const std::vector<std::pair<std::string, std::string>>& secs,
    const std::string& name) {
    for (const auto& [h, b] : secs)
        if (h == name) return b;
    throw od::parse_error("input stream has no '" + name + "' section");
}

od::Graph read_graph(const std::string& path) {
    auto secs = sections(slurp(path), "graph");
    return od::parse_graph(find_section(secs, "graph"));
}

std::string dot_graph(const od::Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) out << "  \"" << g.vertex_name(v) << "\";\n";
    for (auto [a, b] : g.edges())
        out << "  \"" << g.vertex_name(a) << "\" -- \"" << g.vertex_name(b) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string dot_poset(const od::Poset& p) {
    // Hasse style: only cover relations
    std::ostringstream out;
    out << "digraph P {\n  rankdir=BT;\n";
    for (int i = 0; i < p.n(); ++i) out << "  \"" << p.element_name(i) << "\";\n";
    for (int a = 0; a < p.n(); ++a)
        for (int b = 0; b < p.n(); ++b) {
            if (!p.less(a, b)) continue;
            bool cover = true;
            for (int m = 0; m < p.n(); ++m)
                if (p.less(a, m) && p.less(m, b)) { cover = false; break; }
            if (cover)
                out << "  \"" << p.element_name(a) << "\" -> \"" << p.element_name(b)
                    << "\";\n";
        }
    out << "}\n";
    return out.str();
}

od::Poset fig2_poset() {
    od::Graph h = od::fixtures::h_graph();
    od::Poset ah = od::build_adjacency_poset(h);
    od::Colouring c = od::three_colour(h);
    // the subposet spanned by colour-1 minimal and colour-3 maximal elements
    std::vector<int> elems;
    for (int v : c.class_of(1)) elems.push_back(v);
    for (int v : c.class_of(3)) elems.push_back(h.n() + v);
    return od::induced_subposet(ah, elems);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"realizers and exact dimension for adjacency posets of "
                 "outerplanar graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    uint64_t seed = 0;
    int64_t budget_ms = 60'000;
    int jobs = 1;
    std::string format = "text";
    bool augment = true;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file (default: stdin)");
    };

    auto* c_check = app.add_subcommand("check", "test outerplanarity");
    add_input(c_check);
    auto* c_embed = app.add_subcommand("embed", "compute a crossing-free line order");
    add_input(c_embed);
    auto* c_color = app.add_subcommand("color", "greedy 3-colouring");
    add_input(c_color);
    auto* c_adj = app.add_subcommand("adjposet", "build the adjacency poset");
    add_input(c_adj);
    auto* c_real = app.add_subcommand("realize", "build the 4-extension realizer");
    add_input(c_real);
    c_real->add_option("--augment", augment,
                       "add private neighbours first (default: true)");
    auto* c_verify = app.add_subcommand("verify", "verify a realizer against a poset");
    add_input(c_verify);
    auto* c_dim = app.add_subcommand("dim", "exact dimension");
    add_input(c_dim);
    auto* c_gen = app.add_subcommand("gen", "generators and fixtures");
    std::vector<std::string> gen_args;
    c_gen->add_option("what", gen_args,
                      "s<n> | knn-minus-pm <n> | random <n> <density> | fixture-h | "
                      "fixture-fig2")
        ->expected(1, 3);
    auto* c_dot = app.add_subcommand("export-dot", "Graphviz export");
    add_input(c_dot);

    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    app.add_option("--seed", seed, "random seed");
    app.add_option("--budget-ms", budget_ms, "solver budget in milliseconds");
    app.add_option("--jobs", jobs, "worker count (results are deterministic)");
    app.add_option("--format", format, "output format: text|dot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_PARSE;
    }

    try {
        if (c_check->parsed()) {
            od::Graph g = read_graph(input);
            auto emb = od::find_embedding(g);
            if (!emb) {
                std::cout << "not outerplanar\n";
                return EXIT_INFEASIBLE;
            }
            std::cout << "outerplanar\n";
            return 0;
        }
        if (c_embed->parsed()) {
            od::Graph g = read_graph(input);
            auto emb = od::find_embedding(g);
            if (!emb) {
                std::cerr << "not outerplanar\n";
                return EXIT_INFEASIBLE;
            }
            std::cout << od::serialize_embedding(g, *emb, true);
            return 0;
        }
        if (c_color->parsed()) {
            od::Graph g = read_graph(input);
            od::Colouring c = od::three_colour(g);
            for (int v = 0; v < g.n(); ++v)
                std::cout << g.vertex_name(v) << " " << c.colour[v] << "\n";
            return 0;
        }
        if (c_adj->parsed()) {
            od::Graph g = read_graph(input);
            std::cout << od::serialize_poset(od::build_adjacency_poset(g), true);
            return 0;
        }
        if (c_real->parsed()) {
            od::Graph g = read_graph(input);
            if (augment) g = od::add_private_neighbours(g);
            auto emb = od::find_embedding(g);
            if (!emb) {
                std::cerr << "not outerplanar\n";
                return EXIT_INFEASIBLE;
            }
            od::Colouring c = od::three_colour(g);
            od::Poset p = od::build_adjacency_poset(g);
            od::Realizer r = od::build_realizer(g, *emb, c);
            auto rep = od::verify_realizer(p, r);
            std::cout << od::serialize_poset(p, true);
            std::cout << od::serialize_realizer(p, r, true);
            return rep.pass() ? 0 : EXIT_VERIFY;
        }
        if (c_verify->parsed()) {
            auto secs = sections(slurp(input), "poset");
            od::Poset p = od::parse_poset(find_section(secs, "poset"));
            od::Realizer r = od::parse_realizer(p, find_section(secs, "realizer"));
            auto rep = od::verify_realizer(p, r);
            for (size_t i = 0; i < rep.extension_validity.size(); ++i) {
                const auto& c = rep.extension_validity[i];
                std::cout << "extension " << (i + 1) << ": "
                          << (c.ok ? "valid" : "invalid: " + c.detail) << "\n";
            }
            for (auto [a, b] : rep.unreversed_pairs)
                std::cout << "unreversed pair (" << p.element_name(a) << ", "
                          << p.element_name(b) << ")\n";
            std::cout << (rep.pass() ? "pass" : "fail") << "\n";
            return rep.pass() ? 0 : EXIT_VERIFY;
        }
        if (c_dim->parsed()) {
            auto secs = sections(slurp(input), "poset");
            od::Poset p;
            bool have = false;
            for (const auto& [h, b] : secs) {
                if (h == "poset") { p = od::parse_poset(b); have = true; }
                if (h == "graph") {
                    p = od::build_adjacency_poset(od::parse_graph(b));
                    have = true;
                }
            }
            if (!have) throw od::parse_error("dim: need a poset or graph section");
            od::DimCertificate cert = od::exact_dimension(p, budget_ms);
            if (!cert.exact) {
                std::cout << cert.lower << " <= dim <= " << cert.upper << "\n";
                return EXIT_BUDGET;
            }
            std::cout << "dim = " << cert.value() << "\n";
            for (size_t i = 0; i < cert.classes.size(); ++i) {
                std::cout << "class " << (i + 1) << ":";
                for (auto [x, y] : cert.classes[i])
                    std::cout << " (" << p.element_name(x) << "," << p.element_name(y)
                              << ")";
                std::cout << "\n";
            }
            for (const auto& ext : cert.witness.extensions)
                std::cout << "witness: " << od::serialize_extension(p, ext.seq);
            return 0;
        }
        if (c_gen->parsed()) {
            if (gen_args.empty()) throw od::parse_error("gen: missing generator name");
            const std::string& what = gen_args[0];
            if (what == "fixture-h") {
                std::cout << "graph\n" << od::fixtures::h_graph_text();
                return 0;
            }
            if (what == "fixture-fig2") {
                std::cout << od::serialize_poset(fig2_poset(), true);
                return 0;
            }
            if (what == "knn-minus-pm") {
                if (gen_args.size() < 2) throw od::parse_error("gen: missing n");
                int n = std::stoi(gen_args[1]);
                std::cout << od::serialize_graph(od::gen_knn_minus_pm(n), true);
                return 0;
            }
            if (what == "random") {
                if (gen_args.size() < 3)
                    throw od::parse_error("gen random: need <n> <density>");
                int n = std::stoi(gen_args[1]);
                double d = std::stod(gen_args[2]);
                std::cout << od::serialize_graph(od::gen_random_outerplanar(n, d, seed),
                                                 true);
                return 0;
            }
            if (what.size() > 1 && what[0] == 's') {
                int n = std::stoi(what.substr(1));
                std::cout << od::serialize_poset(od::gen_standard_example(n), true);
                return 0;
            }
            throw od::parse_error("gen: unknown generator: " + what);
        }
        if (c_dot->parsed()) {
            auto secs = sections(slurp(input), "graph");
            for (const auto& [h, b] : secs) {
                if (h == "graph") {
                    std::cout << dot_graph(od::parse_graph(b));
                    return 0;
                }
                if (h == "poset") {
                    std::cout << dot_poset(od::parse_poset(b));
                    return 0;
                }
            }
            throw od::parse_error("export-dot: need a graph or poset section");
        }
    } catch (const od::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BUDGET;
    } catch (const od::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_PARSE;
    }
    return 0;
}
