#ifndef ORDERDIM_REALIZER_HPP
#define ORDERDIM_REALIZER_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "graph.hpp"
#include "outerplanar.hpp"
#include "poset.hpp"

namespace orderdim {

// The order primitives work on vertex sets and emit element index sequences
// into the adjacency poset of g (Min(v) = v, Max(v) = n + v).

// (X, Y)^>: X in embedding order; each maximal placed at the earliest slot
// after all of its X-neighbours, i.e. just after its rightmost X-neighbour
// (front of the block when it has none). Maximals sharing a slot appear in
// reverse embedding order of their underlying vertices.
inline std::vector<int> order_right(const Graph& g, const Embedding& e,
                                    const std::vector<int>& X,
                                    const std::vector<int>& Y) {
    std::vector<int> xs = X;
    std::sort(xs.begin(), xs.end(),
              [&](int a, int b) { return e.position[a] < e.position[b]; });
    std::vector<int> slot_of(g.n(), -1);  // X vertex -> index in xs
    for (size_t i = 0; i < xs.size(); ++i) slot_of[xs[i]] = static_cast<int>(i);
    // bucket k holds maximals anchored right after xs[k-1]; bucket 0 is the front
    std::vector<std::vector<int>> bucket(xs.size() + 1);
    for (int y : Y) {
        int anchor = 0;
        for (int u : g.neighbours(y))
            if (slot_of[u] >= 0) anchor = std::max(anchor, slot_of[u] + 1);
        bucket[anchor].push_back(y);
    }
    for (auto& b : bucket)
        std::sort(b.begin(), b.end(),
                  [&](int a, int c) { return e.position[a] > e.position[c]; });
    std::vector<int> out;
    for (size_t k = 0; k <= xs.size(); ++k) {
        if (k > 0) out.push_back(xs[k - 1]);
        for (int y : bucket[k]) out.push_back(g.n() + y);
    }
    return out;
}

// (X, Y)^<: X in reverse embedding order; anchors are each maximal's
// leftmost-in-embedding X-neighbour; same-slot ties as in order_right.
inline std::vector<int> order_left(const Graph& g, const Embedding& e,
                                   const std::vector<int>& X,
                                   const std::vector<int>& Y) {
    std::vector<int> xs = X;
    std::sort(xs.begin(), xs.end(),
              [&](int a, int b) { return e.position[a] > e.position[b]; });
    std::vector<int> slot_of(g.n(), -1);
    for (size_t i = 0; i < xs.size(); ++i) slot_of[xs[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> bucket(xs.size() + 1);
    for (int y : Y) {
        int anchor = 0;
        for (int u : g.neighbours(y))
            if (slot_of[u] >= 0) anchor = std::max(anchor, slot_of[u] + 1);
        bucket[anchor].push_back(y);
    }
    for (auto& b : bucket)
        std::sort(b.begin(), b.end(),
                  [&](int a, int c) { return e.position[a] > e.position[c]; });
    std::vector<int> out;
    for (size_t k = 0; k <= xs.size(); ++k) {
        if (k > 0) out.push_back(xs[k - 1]);
        for (int y : bucket[k]) out.push_back(g.n() + y);
    }
    return out;
}

// (X, Y)^triangle: reverse inclusion of J_v (v under X, neighbour filter Y)
// and I_u (u under Y). Ties: equal intervals put J before I; equal intervals
// of the same kind follow the embedding order of the owners. Linearized by
// (length desc, lo asc, J-before-I, embedding order); a strict superset has
// strictly greater length or the same length with containment, so this sorts
// every related pair correctly.
inline std::vector<int> order_triangle(const Graph& g, const Embedding& e,
                                       const std::vector<int>& X,
                                       const std::vector<int>& Y) {
    for (int u : Y)
        for (int v : Y)
            if (u != v && g.has_edge(u, v))
                throw parse_error("order_triangle: Y must be an independent set");
    std::vector<bool> in_Y(g.n(), false);
    for (int u : Y) in_Y[u] = true;
    struct Item {
        Interval iv;
        int elem;  // element index in A_g
    };
    std::vector<Item> items;
    for (int v : X) items.push_back({interval_J(e, g, v, in_Y), v});
    for (int u : Y) items.push_back({interval_I(e, g, u), g.n() + u});
    std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        if (a.iv.length() != b.iv.length()) return a.iv.length() > b.iv.length();
        if (a.iv.lo != b.iv.lo) return a.iv.lo < b.iv.lo;
        if (a.iv.kind != b.iv.kind) return a.iv.kind == 'J';
        return e.position[a.iv.owner] < e.position[b.iv.owner];
    });
    std::vector<int> out;
    for (const auto& it : items) out.push_back(it.elem);
    return out;
}

// The partial order P(X, Y) behind the triangle order, for tests: does the
// construction force elem_a before elem_b
inline bool triangle_forces(const Interval& a, const Interval& b) {
    if (a.equals(b)) {
        if (a.kind == b.kind) return false;
        return a.kind == 'J';  // tie rule: J_v < I_u
    }
    return a.strictly_contains(b);
}

// ---- the 4-extension realizer table -------------------------------------------

// L1 = (B u C, A')^tri ++ (A, B' u C')^>
// L2 = (A u C, B')^tri ++ (B, A' u C')^>
// L3 = (A u B, C')^tri ++ (C, A' u B')^>
// L4 = (A u B u C, A' u B' u C')^<
inline Realizer build_realizer(const Graph& g, const Embedding& e, const Colouring& c) {
    for (auto [a, b] : g.edges())
        if (c.colour[a] == c.colour[b])
            throw parse_error("build_realizer: colouring is not proper");
    std::vector<int> A = c.class_of(1), B = c.class_of(2), C = c.class_of(3);
    auto cat = [](std::vector<int> u, const std::vector<int>& v) {
        u.insert(u.end(), v.begin(), v.end());
        return u;
    };
    std::vector<int> all = cat(cat(A, B), C);
    Realizer r;
    {
        auto l = order_triangle(g, e, cat(B, C), A);
        auto t = order_right(g, e, A, cat(B, C));
        r.extensions.push_back({cat(l, t)});
    }
    {
        auto l = order_triangle(g, e, cat(A, C), B);
        auto t = order_right(g, e, B, cat(A, C));
        r.extensions.push_back({cat(l, t)});
    }
    {
        auto l = order_triangle(g, e, cat(A, B), C);
        auto t = order_right(g, e, C, cat(A, B));
        r.extensions.push_back({cat(l, t)});
    }
    r.extensions.push_back({order_left(g, e, all, all)});
    return r;
}

// ---- verification --------------------------------------------------------------

struct VerificationReport {
    std::vector<ExtensionCheck> extension_validity;
    bool intersection_equals_poset = false;
    std::vector<std::pair<int, int>> unreversed_pairs;
    std::vector<std::pair<int, int>> wrong_comparabilities;

    bool pass() const {
        for (const auto& c : extension_validity)
            if (!c.ok) return false;
        return intersection_equals_poset && unreversed_pairs.empty() &&
               wrong_comparabilities.empty();
    }
};

inline VerificationReport verify_realizer(const Poset& p, const Realizer& r) {
    VerificationReport rep;
    std::vector<std::vector<int>> at;
    for (const auto& ext : r.extensions) {
        rep.extension_validity.push_back(is_linear_extension(p, ext.seq));
        std::vector<int> pos(p.n(), -1);
        if (rep.extension_validity.back().ok)
            for (size_t i = 0; i < ext.seq.size(); ++i)
                pos[ext.seq[i]] = static_cast<int>(i);
        at.push_back(std::move(pos));
    }
    for (const auto& c : rep.extension_validity)
        if (!c.ok) return rep;
    for (int a = 0; a < p.n(); ++a)
        for (int b = 0; b < p.n(); ++b) {
            if (a == b || p.comparable(a, b)) continue;
            bool reversed = false;  // some extension puts b before a
            for (const auto& pos : at)
                if (pos[b] < pos[a]) { reversed = true; break; }
            if (!reversed) {
                rep.unreversed_pairs.emplace_back(a, b);
                rep.wrong_comparabilities.emplace_back(a, b);
            }
        }
    rep.intersection_equals_poset = rep.unreversed_pairs.empty();
    return rep;
}

// ---- realizer file format: one extension per line ------------------------------

inline std::string serialize_realizer(const Poset& p, const Realizer& r,
                                      bool header = false) {
    std::string out;
    if (header) out += "realizer\n";
    for (const auto& ext : r.extensions) out += serialize_extension(p, ext.seq);
    return out;
}

inline Realizer parse_realizer(const Poset& p, const std::string& text) {
    Realizer r;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line == "realizer") continue;
        r.extensions.push_back({parse_extension(p, line)});
    }
    return r;
}

}  // namespace orderdim

#endif
