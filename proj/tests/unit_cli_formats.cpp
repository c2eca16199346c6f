#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "orderdim/orderdim.hpp"

using namespace orderdim;

namespace {

struct CmdResult {
    int status;
    std::string out;
};

// run a shell pipeline from the build directory (where ctest executes)
CmdResult run(const std::string& cmd) {
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    int raw = pclose(f);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool cli_available() {
    return run("test -x ./orderdim 2>/dev/null").status == 0;
}

}  // namespace

TEST_CASE("pipeline section headers are self-describing") {
    // header-labelled streams round-trip through the library parsers
    Graph g = parse_graph("graph\nv a\nv b\ne a b\n");
    CHECK(g.n() == 2);
    Poset p = parse_poset("poset\nel a\nel b\nlt a b\n");
    CHECK(p.less(0, 1));
    Embedding e = parse_embedding(g, "embedding a b");
    CHECK(e.order.size() == 2);
}

TEST_CASE("serializers emit the documented headers") {
    Graph g = parse_graph("v a\nv b\ne a b\n");
    CHECK(serialize_graph(g, true).rfind("graph\n", 0) == 0);
    Poset p = build_adjacency_poset(g);
    CHECK(serialize_poset(p, true).rfind("poset\n", 0) == 0);
    Embedding e = *find_embedding(g);
    CHECK(serialize_embedding(g, e, true).rfind("embedding\n", 0) == 0);
    Realizer r = build_realizer(g, e, three_colour(g));
    CHECK(serialize_realizer(p, r, true).rfind("realizer\n", 0) == 0);
}

TEST_CASE("cli: gen s3 | dim prints the exact dimension") {
    if (!cli_available()) return;  // unit binary run outside the build tree
    auto res = run("./orderdim gen s3 | ./orderdim dim");
    CHECK(res.status == 0);
    CHECK(res.out.find("dim = 3") != std::string::npos);
}

TEST_CASE("cli: realize then verify round trip on the fixture") {
    if (!cli_available()) return;
    auto res = run("./orderdim gen fixture-h | ./orderdim realize --augment=false | "
                   "./orderdim verify");
    CHECK(res.status == 0);
    CHECK(res.out.find("pass") != std::string::npos);

    auto aug = run("./orderdim gen fixture-h | ./orderdim realize | ./orderdim verify");
    CHECK(aug.status == 0);
}

TEST_CASE("cli: check classifies outerplanarity with exit codes") {
    if (!cli_available()) return;
    auto k4 = run("printf 'v a\\nv b\\nv c\\nv d\\ne a b\\ne a c\\ne a d\\ne b c\\n"
                  "e b d\\ne c d\\n' | ./orderdim check");
    CHECK(k4.status == 2);
    auto c5 = run("./orderdim gen random 5 0 | ./orderdim check");
    CHECK(c5.status == 0);
    CHECK(c5.out.find("outerplanar") != std::string::npos);
}

TEST_CASE("cli: parse errors exit 1") {
    if (!cli_available()) return;
    CHECK(run("printf 'v a\\ne a a\\n' | ./orderdim adjposet 2>/dev/null").status == 1);
    CHECK(run("./orderdim gen nonsense 2>/dev/null").status == 1);
}

TEST_CASE("cli: generator and fixture output is byte-stable") {
    if (!cli_available()) return;
    CHECK(run("./orderdim gen fixture-h").out == run("./orderdim gen fixture-h").out);
    CHECK(run("./orderdim gen fixture-fig2").out ==
          run("./orderdim gen fixture-fig2").out);
    CHECK(run("./orderdim gen random 9 0.5 --seed 4").out ==
          run("./orderdim gen random 9 0.5 --seed 4").out);

    // fixture-h matches the library fixture byte for byte
    CHECK(run("./orderdim gen fixture-h").out ==
          std::string("graph\n") + fixtures::h_graph_text());
}

TEST_CASE("cli: subcommands are thin wrappers over the library") {
    if (!cli_available()) return;
    Graph g = gen_random_outerplanar(8, 0.5, 11);
    auto emb = run("./orderdim gen random 8 0.5 --seed 11 | ./orderdim embed");
    CHECK(emb.status == 0);
    Embedding direct = *find_embedding(g);
    CHECK(emb.out == serialize_embedding(g, direct, true));

    auto adj = run("./orderdim gen random 8 0.5 --seed 11 | ./orderdim adjposet");
    CHECK(adj.out == serialize_poset(build_adjacency_poset(g), true));
}

TEST_CASE("cli: export-dot emits DOT text") {
    if (!cli_available()) return;
    auto dg = run("./orderdim gen random 5 0 | ./orderdim export-dot");
    CHECK(dg.status == 0);
    CHECK(dg.out.rfind("graph G {", 0) == 0);
    auto dp = run("./orderdim gen s2 | ./orderdim export-dot");
    CHECK(dp.status == 0);
    CHECK(dp.out.rfind("digraph P {", 0) == 0);
    CHECK(dp.out.find("->") != std::string::npos);
}

TEST_CASE("cli: dim on a piped graph section builds the adjacency poset") {
    if (!cli_available()) return;
    auto res = run("./orderdim gen knn-minus-pm 3 | ./orderdim dim");
    CHECK(res.status == 0);
    CHECK(res.out.find("dim = 3") != std::string::npos);
    CHECK(res.out.find("witness:") != std::string::npos);
}
