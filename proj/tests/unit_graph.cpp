#include <doctest.h>

#include <set>

#include "orderdim/orderdim.hpp"

using namespace orderdim;

TEST_CASE("parse_graph basics") {
    Graph g = parse_graph("v a\nv b\ne a b\n");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    CHECK(g.vertex_name(0) == "a");
    CHECK(g.vertex_name(1) == "b");
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("parse_graph accepts comments and a header line") {
    Graph g = parse_graph("graph\n# comment\nv a\nv b\n\ne a b\n");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("v a\ne a a\n"),
                         doctest::Contains("self-loop"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("v a\nv a\n"),
                         doctest::Contains("duplicate vertex"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("v a\ne a b\n"),
                         doctest::Contains("undeclared"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("v a\nv b\ne a b\ne b a\n"),
                         doctest::Contains("duplicate edge"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("v a\nx q\n"),
                         doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_AS(parse_graph("v a b\n"), parse_error);
}

TEST_CASE("graph serialize/parse round trip is the identity on canonical form") {
    Graph g = parse_graph("v b\nv a\nv c\ne b a\ne c b\n");
    std::string s = serialize_graph(g);
    Graph h = parse_graph(s);
    CHECK(serialize_graph(h) == s);
    CHECK(h.vertex_names() == g.vertex_names());
    // edges sorted by (first endpoint order, second endpoint order)
    CHECK(s == "v b\nv a\nv c\ne b a\ne b c\n");
}

TEST_CASE("chromatic_number on small graphs") {
    CHECK(chromatic_number(parse_graph("v a\nv b\nv c\ne a b\ne b c\ne a c\n")) == 3);
    CHECK(chromatic_number(gen_knn_minus_pm(3)) == 2);
    CHECK(chromatic_number(parse_graph("v a\n")) == 1);
    CHECK(chromatic_number(fixtures::h_graph()) == 3);
}

TEST_CASE("add_private_neighbours") {
    Graph one = add_private_neighbours(parse_graph("v a\n"));
    CHECK(one.n() == 2);
    CHECK(one.m() == 1);
    CHECK(one.vertex_name(1) == "a*");

    Graph ab = add_private_neighbours(parse_graph("v a\nv b\ne a b\n"));
    CHECK(ab.n() == 4);
    CHECK(ab.m() == 3);

    Graph h = fixtures::h_graph();
    Graph ha = add_private_neighbours(h);
    CHECK(ha.n() == 28);
    CHECK(ha.m() == h.m() + 14);
    CHECK(find_embedding(ha).has_value());

    // original graph is the induced subgraph on the original vertices
    for (int a = 0; a < h.n(); ++a)
        for (int b = a + 1; b < h.n(); ++b)
            CHECK(ha.has_edge(a, b) == h.has_edge(a, b));
    for (int v = 0; v < h.n(); ++v) CHECK(ha.vertex_name(v) == h.vertex_name(v));

    CHECK_THROWS_AS(add_private_neighbours(parse_graph("v a*\n")), parse_error);
}

TEST_CASE("add_apex") {
    Graph one = add_apex(parse_graph("v a\n"));
    CHECK(one.n() == 2);
    CHECK(one.has_edge(0, 1));

    Graph w4 = add_apex(parse_graph("v a\nv b\nv c\nv d\ne a b\ne b c\ne c d\ne d a\n"));
    CHECK(w4.n() == 5);
    CHECK(w4.m() == 8);
    CHECK(w4.degree(w4.vertex_index("apex")) == 4);

    CHECK_THROWS_AS(add_apex(parse_graph("v apex\n")), parse_error);
}

TEST_CASE("gen_knn_minus_pm") {
    Graph g1 = gen_knn_minus_pm(1);
    CHECK(g1.n() == 2);
    CHECK(g1.m() == 0);

    Graph g2 = gen_knn_minus_pm(2);
    CHECK(g2.m() == 2);
    CHECK(g2.has_edge(g2.vertex_index("u1"), g2.vertex_index("w2")));
    CHECK(g2.has_edge(g2.vertex_index("u2"), g2.vertex_index("w1")));

    Graph g3 = gen_knn_minus_pm(3);  // the 6-cycle
    CHECK(g3.n() == 6);
    CHECK(g3.m() == 6);
    for (int v = 0; v < 6; ++v) CHECK(g3.degree(v) == 2);
    CHECK(chromatic_number(g3) == 2);
    CHECK(chromatic_number(gen_knn_minus_pm(4)) == 2);

    CHECK_THROWS_AS(gen_knn_minus_pm(0), parse_error);
}

TEST_CASE("gen_random_outerplanar shape") {
    CHECK(gen_random_outerplanar(1, 1.0, 5).n() == 1);
    CHECK(gen_random_outerplanar(2, 0.0, 5).m() == 1);

    for (int n = 3; n <= 10; ++n) {
        Graph c = gen_random_outerplanar(n, 0.0, 7);
        CHECK(c.m() == n);  // the hull cycle, all chords dropped
        for (int v = 0; v < n; ++v) CHECK(c.degree(v) == 2);
    }

    Graph g = gen_random_outerplanar(12, 0.5, 7);
    CHECK(g.m() <= 2 * 12 - 3);

    // determinism
    CHECK(serialize_graph(gen_random_outerplanar(9, 0.7, 42)) ==
          serialize_graph(gen_random_outerplanar(9, 0.7, 42)));
}

TEST_CASE("every generated outerplanar graph is accepted by find_embedding") {
    int trials = 0;
    for (uint64_t seed = 0; seed < 125; ++seed)
        for (int n : {1, 4, 8, 13})
            for (double d : {0.0, 0.5}) {
                Graph g = gen_random_outerplanar(n, d, seed);
                CHECK(g.m() <= std::max(0, 2 * g.n() - 3));
                CHECK(find_embedding(g).has_value());
                ++trials;
            }
    CHECK(trials == 1000);
}
