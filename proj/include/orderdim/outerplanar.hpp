#ifndef ORDERDIM_OUTERPLANAR_HPP
#define ORDERDIM_OUTERPLANAR_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace orderdim {

// Line layout: order[p] is the vertex at position p.
struct Embedding {
    std::vector<int> order;
    std::vector<int> position;  // inverse of order

    static Embedding from_order(std::vector<int> ord) {
        Embedding e;
        e.position.assign(ord.size(), -1);
        for (size_t p = 0; p < ord.size(); ++p) e.position[ord[p]] = static_cast<int>(p);
        e.order = std::move(ord);
        return e;
    }
};

inline bool crossing_free(const Graph& g, const Embedding& e) {
    auto span = [&](std::pair<int, int> ed) {
        int a = e.position[ed.first], b = e.position[ed.second];
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = span(es[i]);
            auto [c, d] = span(es[j]);
            if (a < c && c < b && b < d) return false;
            if (c < a && a < d && d < b) return false;
        }
    return true;
}

namespace detail {

// Backtracking search for the lexicographically smallest (by declaration
// order of the component's vertices) crossing-free line order.
//
// Pruning: when an edge (i,k) closes, every vertex placed strictly between
// positions i and k must have all its neighbours placed already, since any
// later vertex lands past k and the resulting edge would cross (i,k).
class LineSearch {
  public:
    LineSearch(const Graph& g, const std::vector<int>& comp,
               const std::vector<bool>& skip, uint64_t node_budget)
        : g_(g), comp_(comp), skip_(skip), budget_(node_budget) {
        pos_.assign(g.n(), -1);
        unplaced_nb_.assign(g.n(), 0);
        for (int v : comp)
            for (int u : g.neighbours(v))
                if (!skip_[u]) ++unplaced_nb_[v];
    }

    std::optional<std::vector<int>> run() {
        if (dfs()) return seq_;
        if (nodes_ >= budget_) throw budget_exceeded("embedding search budget exceeded");
        return std::nullopt;
    }

  private:
    // Candidates keep the placed prefix connected: the outer-face walk of any
    // outerplanar embedding yields a crossing-free layout whose prefixes are
    // all connected, so this restriction never misses an embeddable graph.
    bool dfs() {
        if (seq_.size() == comp_.size()) return true;
        if (++nodes_ >= budget_) return false;
        for (int v : comp_) {
            if (pos_[v] >= 0) continue;
            if (!seq_.empty()) {
                bool touches = false;
                for (int u : g_.neighbours(v))
                    if (!skip_[u] && pos_[u] >= 0) { touches = true; break; }
                if (!touches) continue;
            }
            size_t mark = closed_.size();
            place(v);
            if (valid_placement(mark) && dfs()) return true;
            unplace(v);
            if (nodes_ >= budget_) return false;
        }
        return false;
    }

    // New edges (i,k) must not cross older closed edges, and must not trap a
    // vertex that still has unplaced neighbours: any later vertex lands past
    // k, so its edge into the gap would cross (i,k).
    bool valid_placement(size_t mark) {
        int k = static_cast<int>(seq_.size()) - 1;
        for (size_t t = mark; t < closed_.size(); ++t) {
            int i = closed_[t].first;
            for (size_t s = 0; s < mark; ++s) {
                auto [a, b] = closed_[s];
                if (a < i && i < b) return false;  // b < k always holds
            }
            for (int j = i + 1; j < k; ++j)
                if (unplaced_nb_[seq_[j]] > 0) return false;
        }
        return true;
    }

    void place(int v) {
        pos_[v] = static_cast<int>(seq_.size());
        seq_.push_back(v);
        for (int u : g_.neighbours(v)) {
            if (skip_[u]) continue;
            --unplaced_nb_[u];
            if (pos_[u] >= 0) closed_.emplace_back(pos_[u], pos_[v]);
        }
    }

    void unplace(int v) {
        size_t drop = 0;
        for (int u : g_.neighbours(v)) {
            if (skip_[u]) continue;
            ++unplaced_nb_[u];
            if (pos_[u] >= 0) ++drop;
        }
        closed_.resize(closed_.size() - drop);
        seq_.pop_back();
        pos_[v] = -1;
    }

    const Graph& g_;
    const std::vector<int>& comp_;
    const std::vector<bool>& skip_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    std::vector<int> seq_;
    std::vector<int> pos_;
    std::vector<int> unplaced_nb_;
    std::vector<std::pair<int, int>> closed_;
};

inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp_id(g.n(), -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.n(); ++s) {
        if (comp_id[s] >= 0) continue;
        std::vector<int> stack{s}, verts;
        comp_id[s] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int u : g.neighbours(v))
                if (comp_id[u] < 0) {
                    comp_id[u] = comp_id[s];
                    stack.push_back(u);
                }
        }
        std::sort(verts.begin(), verts.end());
        comps.push_back(std::move(verts));
    }
    return comps;
}

}  // namespace detail

// Exhaustive recognition. Edge-count prefilter, then per-component search.
//
// Degree-1 vertices are stripped iteratively before the search and spliced
// back in immediately after their attachment vertex. Any embeddable graph has
// a crossing-free layout of this shape (a degree-1 vertex can always be moved
// next to its neighbour: the unit edge cannot be crossed and every edge over
// the new slot nests around it), so this loses no graphs, keeps pendants next
// to their owners, and shrinks the search.
inline std::optional<Embedding> find_embedding(const Graph& g,
                                               uint64_t node_budget = 50'000'000) {
    if (g.n() >= 2 && g.m() > 2 * g.n() - 3) return std::nullopt;
    std::vector<int> deg(g.n());
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    std::vector<bool> stripped(g.n(), false);
    std::vector<std::pair<int, int>> strip_log;  // (vertex, attachment)
    bool more = true;
    while (more) {
        more = false;
        for (int v = 0; v < g.n(); ++v) {
            if (stripped[v] || deg[v] != 1) continue;
            int att = -1;
            for (int u : g.neighbours(v))
                if (!stripped[u]) att = u;
            stripped[v] = true;
            --deg[att];
            strip_log.emplace_back(v, att);
            more = true;
        }
    }
    std::vector<int> full;
    for (const auto& comp : detail::components(g)) {
        std::vector<int> core;
        for (int v : comp)
            if (!stripped[v]) core.push_back(v);
        if (core.empty()) continue;  // cannot happen: stripping leaves >= 1
        detail::LineSearch search(g, core, stripped, node_budget);
        auto sub = search.run();
        if (!sub) return std::nullopt;
        // splice stripped vertices back, in reverse strip order, each
        // immediately after its attachment
        std::vector<bool> in_comp(g.n(), false);
        for (int v : comp) in_comp[v] = true;
        std::vector<int> seq = *sub;
        for (auto it = strip_log.rbegin(); it != strip_log.rend(); ++it) {
            auto [v, att] = *it;
            if (!in_comp[v]) continue;
            auto pos = std::find(seq.begin(), seq.end(), att);
            seq.insert(pos + 1, v);
        }
        full.insert(full.end(), seq.begin(), seq.end());
    }
    return Embedding::from_order(std::move(full));
}

// Greedy 3-colouring via 2-degeneracy: peel a minimum-degree vertex (ties by
// declaration order), colour in reverse peel order with the lowest free index.
inline Colouring three_colour(const Graph& g) {
    std::vector<int> live_deg(g.n());
    std::vector<bool> alive(g.n(), true);
    for (int v = 0; v < g.n(); ++v) live_deg[v] = g.degree(v);
    std::vector<int> peel;
    for (int step = 0; step < g.n(); ++step) {
        int best = -1;
        for (int v = 0; v < g.n(); ++v)
            if (alive[v] && (best < 0 || live_deg[v] < live_deg[best])) best = v;
        if (live_deg[best] > 2)
            throw parse_error("graph is not 2-degenerate");
        alive[best] = false;
        peel.push_back(best);
        for (int u : g.neighbours(best))
            if (alive[u]) --live_deg[u];
    }
    Colouring c;
    c.colour.assign(g.n(), 0);
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        bool used[5] = {};
        for (int u : g.neighbours(*it))
            if (c.colour[u] >= 1 && c.colour[u] <= 4) used[c.colour[u]] = true;
        int col = 1;
        while (used[col]) ++col;
        c.colour[*it] = col;
    }
    return c;
}

// ---- interval geometry of the construction ----------------------------------

struct Interval {
    int lo, hi;
    int owner;
    char kind;  // 'I' or 'J'

    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool strictly_contains(const Interval& o) const {
        return contains(o) && (lo != o.lo || hi != o.hi);
    }
    bool equals(const Interval& o) const { return lo == o.lo && hi == o.hi; }
    int length() const { return hi - lo; }
};

inline Interval interval_I(const Embedding& e, const Graph& g, int v) {
    int lo = e.position[v], hi = e.position[v];
    for (int u : g.neighbours(v)) {
        lo = std::min(lo, e.position[u]);
        hi = std::max(hi, e.position[u]);
    }
    return Interval{lo, hi, v, 'I'};
}

inline Interval interval_J(const Embedding& e, const Graph& g, int v,
                           const std::vector<bool>& in_Y) {
    if (in_Y[v]) throw parse_error("interval_J: owner must not be in Y");
    Interval iv = interval_I(e, g, v);
    Interval out{iv.lo, iv.hi, v, 'J'};
    for (int u : g.neighbours(v)) {
        if (!in_Y[u]) continue;
        Interval iu = interval_I(e, g, u);
        out.lo = std::min(out.lo, iu.lo);
        out.hi = std::max(out.hi, iu.hi);
    }
    return out;
}

// ---- embedding text format: one space-separated line ------------------------

inline std::string serialize_embedding(const Graph& g, const Embedding& e,
                                       bool header = false) {
    std::ostringstream out;
    if (header) out << "embedding\n";
    for (size_t p = 0; p < e.order.size(); ++p)
        out << (p ? " " : "") << g.vertex_name(e.order[p]);
    out << "\n";
    return out.str();
}

inline Embedding parse_embedding(const Graph& g, const std::string& line) {
    std::istringstream in(line);
    std::string tok;
    std::vector<int> ord;
    std::vector<bool> seen(g.n(), false);
    while (in >> tok) {
        if (tok == "embedding") continue;
        int v = g.vertex_index(tok);
        if (seen[v]) throw parse_error("embedding repeats vertex: " + tok);
        seen[v] = true;
        ord.push_back(v);
    }
    if (static_cast<int>(ord.size()) != g.n())
        throw parse_error("embedding does not cover all vertices");
    return Embedding::from_order(std::move(ord));
}

}  // namespace orderdim

#endif
