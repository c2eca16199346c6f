#ifndef ORDERDIM_FIXTURES_HPP
#define ORDERDIM_FIXTURES_HPP

#include <string>
#include <vector>

#include "graph.hpp"
#include "outerplanar.hpp"
#include "poset.hpp"

namespace orderdim {
namespace fixtures {

// The 14-vertex outerplanar graph H, transcribed from the figures. The line
// order below reproduces both directed caption strings token-for-token and
// admits the triangle caption as a linear extension; its adjacency poset has
// dimension exactly 4.
inline const char* h_graph_text() {
    return "v a1\nv a2\nv a3\nv a4\nv a5\nv a6\n"
           "v b1\nv b2\nv b3\nv b4\n"
           "v c1\nv c2\nv c3\nv c4\n"
           "e a1 b2\ne a1 c1\n"
           "e a2 b1\ne a2 b2\ne a2 c1\ne a2 c2\n"
           "e a3 b3\ne a3 b4\ne a3 c2\ne a3 c3\n"
           "e a4 b3\ne a4 c3\n"
           "e a5 b1\ne a5 b4\ne a5 c4\n"
           "e a6 b1\ne a6 c4\n"
           "e b1 c1\ne b1 c2\ne b1 c4\n"
           "e b2 c1\n"
           "e b3 c3\n"
           "e b4 c2\ne b4 c3\n";
}

inline Graph h_graph() { return parse_graph(h_graph_text()); }

inline const char* h_embedding_text() {
    return "b1 c1 a1 b2 a2 c2 a3 b3 a4 c3 b4 a5 c4 a6";
}

inline Embedding h_embedding(const Graph& g) {
    return parse_embedding(g, h_embedding_text());
}

// Letter classes of H numbered as three_colour assigns them: C=1, B=2, A=3.
inline Colouring h_colouring(const Graph& g) {
    Colouring c;
    c.colour.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        char k = g.vertex_name(v)[0];
        c.colour[v] = (k == 'c') ? 1 : (k == 'b') ? 2 : 3;
    }
    return c;
}

// Caption strings for the two directed orders on (A, B' u C').
inline const char* caption_right() {
    return "a1 a2 b2' c1' a3 c2' a4 c3' b3' a5 b4' a6 c4' b1'";
}
inline const char* caption_left() {
    return "a6 a5 c4' a4 a3 b4' c3' b3' a2 c2' b1' a1 b2' c1'";
}
// Caption for the triangle order on (B u C, A').
inline const char* caption_triangle() {
    return "b1 c4 a6' b4 a5' c2 c1 b2 a2' a1' b3 c3 a3' a4'";
}

}  // namespace fixtures
}  // namespace orderdim

#endif
