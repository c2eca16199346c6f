// Acceptance suite: one line per criterion, pass/fail plus timing. Criteria
// 1-10 gate the exit status; criterion 11 is reported but never gates.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orderdim/orderdim.hpp"

using namespace orderdim;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int criterion, bool pass, double ms, const std::string& detail,
            bool gating = true) {
    std::cout << "criterion " << criterion << ": " << (pass ? "pass" : "FAIL")
              << " (" << ms << " ms" << (detail.empty() ? "" : "; " + detail)
              << (gating ? "" : "; non-gating") << ")\n";
    if (!pass && gating) ++failures;
}

std::string render(const Graph& g, const std::vector<int>& seq) {
    std::ostringstream out;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) out << " ";
        if (seq[i] < g.n()) out << g.vertex_name(seq[i]);
        else out << g.vertex_name(seq[i] - g.n()) << "'";
    }
    return out.str();
}

// the deterministic 200-graph suite shared by criteria 2, 3, 9, 10
struct Suite {
    std::vector<Graph> graphs;
    Suite() {
        double densities[4] = {0.0, 0.3, 0.7, 1.0};
        for (int i = 0; i < 200; ++i)
            graphs.push_back(gen_random_outerplanar(1 + i % 14, densities[i % 4],
                                                    1000 + i));
    }
};

}  // namespace

int main() {
    Suite suite;
    Graph h = fixtures::h_graph();
    Embedding he = fixtures::h_embedding(h);

    {  // 1: the two directed caption strings, token for token
        auto t0 = Clock::now();
        std::vector<int> A, BC;
        for (int v = 0; v < h.n(); ++v)
            (h.vertex_name(v)[0] == 'a' ? A : BC).push_back(v);
        bool ok = render(h, order_right(h, he, A, BC)) == fixtures::caption_right() &&
                  render(h, order_left(h, he, A, BC)) == fixtures::caption_left();
        double ms = ms_since(t0);
        report(1, ok && ms < 1.0, ms, "order_right/order_left vs reference strings");
    }

    std::vector<Realizer> suite_realizers(suite.graphs.size());
    std::vector<Graph> suite_augmented;
    {  // 2: augmented realizer construction passes verification on all 200
        auto t0 = Clock::now();
        int pass = 0;
        for (size_t i = 0; i < suite.graphs.size(); ++i) {
            Graph g = add_private_neighbours(suite.graphs[i]);
            suite_augmented.push_back(g);
            auto e = find_embedding(g);
            if (!e) continue;
            Poset p = build_adjacency_poset(g);
            suite_realizers[i] = build_realizer(g, *e, three_colour(g));
            if (verify_realizer(p, suite_realizers[i]).pass()) ++pass;
        }
        double ms = ms_since(t0);
        report(2, pass == 200 && ms < 10'000.0, ms,
               std::to_string(pass) + "/200 verified");
    }

    std::vector<int> suite_dims(suite.graphs.size(), -1);
    {  // 3: exact dimension at most 4 on the same graphs
        auto t0 = Clock::now();
        int pass = 0;
        for (size_t i = 0; i < suite.graphs.size(); ++i) {
            auto cert = exact_dimension(build_adjacency_poset(suite.graphs[i]), 60'000);
            suite_dims[i] = cert.value();
            if (cert.exact && cert.value() <= 4) ++pass;
        }
        report(3, pass == 200, ms_since(t0), std::to_string(pass) + "/200 have dim <= 4");
    }

    {  // 4: the fixture lower bound, dim(A_H) = 4
        auto t0 = Clock::now();
        auto cert = exact_dimension(build_adjacency_poset(h), 600'000);
        report(4, cert.exact && cert.value() == 4, ms_since(t0),
               "dim(A_H) = " + std::to_string(cert.value()));
    }

    {  // 5: standard examples
        auto t0 = Clock::now();
        bool ok = true;
        for (int n = 2; n <= 5; ++n)
            ok = ok && exact_dimension(gen_standard_example(n), 60'000).value() == n;
        double ms = ms_since(t0);
        report(5, ok && ms < 10'000.0, ms, "dim(S_n) = n for n = 2..5");
    }

    {  // 6: K_{n,n} minus a perfect matching
        auto t0 = Clock::now();
        bool ok = true;
        for (int n : {3, 4}) {
            Graph g = gen_knn_minus_pm(n);
            ok = ok && chromatic_number(g) == 2 &&
                 exact_dimension(build_adjacency_poset(g), 60'000).value() == n;
        }
        double ms = ms_since(t0);
        report(6, ok && ms < 60'000.0, ms, "chi = 2 and dim = n for n = 3, 4");
    }

    {  // 7: the derived subposet on colour-1 minimals and colour-3 maximals
        auto t0 = Clock::now();
        Poset ah = build_adjacency_poset(h);
        Colouring c = three_colour(h);
        std::vector<int> elems;
        for (int v : c.class_of(1)) elems.push_back(v);
        for (int v : c.class_of(3)) elems.push_back(h.n() + v);
        Poset fig2 = induced_subposet(ah, elems);
        auto cert = exact_dimension(fig2, 60'000);
        double ms = ms_since(t0);
        report(7, cert.exact && cert.value() >= 3 && ms < 10'000.0, ms,
               "dim = " + std::to_string(cert.value()) + " on " +
                   std::to_string(fig2.n()) + " elements");
    }

    {  // 8: oracle equivalence
        auto t0 = Clock::now();
        std::mt19937_64 rng(4242);
        std::uniform_int_distribution<int> size_pick(2, 7);
        std::uniform_real_distribution<double> dens(0.0, 0.9);
        auto random_poset = [&](int n) {
            std::vector<std::string> names;
            for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
            Poset p(std::move(names));
            double d = dens(rng);
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (coin(rng) < d) p.add_less(a, b);
            return p;
        };
        int dim_agree = 0;
        for (int trial = 0; trial < 50; ++trial) {
            Poset p = random_poset(size_pick(rng));
            if (exact_dimension(p, 60'000).value() == brute_force_dimension(p))
                ++dim_agree;
        }
        int rev_agree = 0;
        for (int trial = 0; trial < 10'000; ++trial) {
            Poset p = random_poset(size_pick(rng));
            std::vector<std::pair<int, int>> inc;
            for (int a = 0; a < p.n(); ++a)
                for (int b = 0; b < p.n(); ++b)
                    if (a != b && !p.comparable(a, b)) inc.emplace_back(a, b);
            std::shuffle(inc.begin(), inc.end(), rng);
            if (inc.size() > 4) inc.resize(4);
            bool r = is_reversible(p, inc);
            if (r == !has_alternating_cycle(p, inc) &&
                r == reversible_by_enumeration(p, inc))
                ++rev_agree;
        }
        report(8, dim_agree == 50 && rev_agree == 10'000, ms_since(t0),
               std::to_string(dim_agree) + "/50 dims, " + std::to_string(rev_agree) +
                   "/10000 reversibility samples");
    }

    {  // 9: dim >= chi, and per-extension reversed vertex sets are independent
        auto t0 = Clock::now();
        bool ok = true;
        for (size_t i = 0; i < suite.graphs.size(); ++i)
            if (suite_dims[i] < chromatic_number(suite.graphs[i])) ok = false;
        for (size_t i = 0; i < suite_augmented.size(); ++i) {
            const Graph& g = suite_augmented[i];
            for (const auto& ext : suite_realizers[i].extensions) {
                std::vector<int> at(2 * g.n(), -1);
                for (size_t k = 0; k < ext.seq.size(); ++k)
                    at[ext.seq[k]] = static_cast<int>(k);
                std::vector<int> reversed_vertices;
                for (int v = 0; v < g.n(); ++v)
                    if (at[g.n() + v] < at[v]) reversed_vertices.push_back(v);
                for (size_t a = 0; a < reversed_vertices.size(); ++a)
                    for (size_t b = a + 1; b < reversed_vertices.size(); ++b)
                        if (g.has_edge(reversed_vertices[a], reversed_vertices[b]))
                            ok = false;
            }
        }
        report(9, ok, ms_since(t0),
               "dim >= chi on 200 graphs; reversed sets independent in 800 extensions");
    }

    {  // 10: interval nesting for non-adjacent pairs on every suite embedding
        auto t0 = Clock::now();
        bool ok = true;
        auto check_graph = [&](const Graph& g) {
            auto e = find_embedding(g);
            if (!e) { ok = false; return; }
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v) {
                    if (g.has_edge(u, v)) continue;
                    Interval iu = interval_I(*e, g, u), iv = interval_I(*e, g, v);
                    bool disjoint = iu.hi <= iv.lo || iv.hi <= iu.lo;
                    if (!disjoint && !iu.contains(iv) && !iv.contains(iu)) ok = false;
                }
        };
        for (const Graph& g : suite.graphs) check_graph(g);
        for (const Graph& g : suite_augmented) check_graph(g);
        check_graph(h);
        report(10, ok, ms_since(t0), "401 embeddings checked");
    }

    {  // 11 (stretch, non-gating): the apex construction
        auto t0 = Clock::now();
        int64_t budget = 600'000;
        if (const char* env = std::getenv("ORDERDIM_C11_BUDGET_MS"))
            budget = std::atoll(env);
        auto cert = exact_dimension(build_adjacency_poset(add_apex(h)), budget);
        std::string detail;
        bool ok;
        if (cert.exact) {
            detail = "dim(A_{H+apex}) = " + std::to_string(cert.value());
            ok = cert.value() >= 5;
        } else {
            detail = "bounds " + std::to_string(cert.lower) + " <= dim <= " +
                     std::to_string(cert.upper);
            ok = cert.lower >= 5 || (cert.lower <= 5 && cert.upper >= 5);
        }
        report(11, ok, ms_since(t0), detail, /*gating=*/false);
    }

    std::cout << (failures == 0 ? "all gating criteria passed"
                                : std::to_string(failures) + " gating criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
