#ifndef ORDERDIM_GRAPH_HPP
#define ORDERDIM_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orderdim {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected graph with named vertices. Declaration order is significant:
// it is the global tie-break order for every deterministic algorithm here.
class Graph {
  public:
    Graph() = default;

    int add_vertex(const std::string& name) {
        if (index_.count(name))
            throw parse_error("duplicate vertex name: " + name);
        index_[name] = static_cast<int>(names_.size());
        names_.push_back(name);
        adj_.emplace_back();
        return static_cast<int>(names_.size()) - 1;
    }

    void add_edge(const std::string& a, const std::string& b) {
        auto ia = index_.find(a), ib = index_.find(b);
        if (ia == index_.end())
            throw parse_error("edge references undeclared vertex: " + a);
        if (ib == index_.end())
            throw parse_error("edge references undeclared vertex: " + b);
        add_edge(ia->second, ib->second);
    }

    void add_edge(int a, int b) {
        if (a == b)
            throw parse_error("self-loop on vertex: " + names_[a]);
        if (has_edge(a, b))
            throw parse_error("duplicate edge: " + names_[a] + " " + names_[b]);
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }

    int n() const { return static_cast<int>(names_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(const std::string& name) const { return index_.count(name) != 0; }

    int vertex_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw parse_error("unknown vertex: " + name);
        return it->second;
    }

    const std::string& vertex_name(int i) const { return names_[i]; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::vector<int>& neighbours(int i) const { return adj_[i]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int a, int b) const {
        for (int u : adj_[a])
            if (u == b) return true;
        return false;
    }

    int degree(int i) const { return static_cast<int>(adj_[i].size()); }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Colour classes by convention: A = 1, B = 2, C = 3.
struct Colouring {
    std::vector<int> colour;  // vertex index -> colour in {1,2,3}

    std::vector<int> class_of(int c) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(colour.size()); ++v)
            if (colour[v] == c) out.push_back(v);
        return out;
    }
};

// ---- file format: `# comment` | `v <name>` | `e <a> <b>` -------------------

inline Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (!saw_header && tag == "graph") { saw_header = true; continue; }
        try {
            if (tag == "v") {
                std::string name, extra;
                if (!(ls >> name) || (ls >> extra))
                    throw parse_error("malformed vertex line");
                g.add_vertex(name);
            } else if (tag == "e") {
                std::string a, b, extra;
                if (!(ls >> a >> b) || (ls >> extra))
                    throw parse_error("malformed edge line");
                g.add_edge(a, b);
            } else {
                throw parse_error("unrecognized record: " + tag);
            }
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return g;
}

inline std::string serialize_graph(const Graph& g, bool header = false) {
    std::ostringstream out;
    if (header) out << "graph\n";
    for (int i = 0; i < g.n(); ++i)
        out << "v " << g.vertex_name(i) << "\n";
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges)
        out << "e " << g.vertex_name(a) << " " << g.vertex_name(b) << "\n";
    return out.str();
}

// ---- exact chromatic number (backtracking, max-degree-first) ---------------

namespace detail {

inline bool colourable(const Graph& g, const std::vector<int>& order, int k,
                       std::vector<int>& col, size_t at) {
    if (at == order.size()) return true;
    int v = order[at];
    int used_max = 0;
    for (size_t i = 0; i < at; ++i) used_max = std::max(used_max, col[order[i]]);
    for (int c = 1; c <= std::min(k, used_max + 1); ++c) {
        bool ok = true;
        for (int u : g.neighbours(v))
            if (col[u] == c) { ok = false; break; }
        if (!ok) continue;
        col[v] = c;
        if (colourable(g, order, k, col, at + 1)) return true;
        col[v] = 0;
    }
    return false;
}

}  // namespace detail

inline int chromatic_number(const Graph& g) {
    if (g.n() == 0) return 0;
    if (g.m() == 0) return 1;
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = 2; k <= g.n(); ++k) {
        std::vector<int> col(g.n(), 0);
        if (detail::colourable(g, order, k, col, 0)) return k;
    }
    return g.n();
}

// ---- paper transformations --------------------------------------------------

// Pendant names use the reserved "<v>*" suffix.
inline Graph add_private_neighbours(const Graph& g) {
    for (int i = 0; i < g.n(); ++i) {
        const std::string& nm = g.vertex_name(i);
        if (!nm.empty() && nm.back() == '*')
            throw parse_error("vertex name uses reserved pendant suffix: " + nm);
    }
    Graph out;
    for (int i = 0; i < g.n(); ++i) out.add_vertex(g.vertex_name(i));
    for (int i = 0; i < g.n(); ++i) out.add_vertex(g.vertex_name(i) + "*");
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (int i = 0; i < g.n(); ++i) out.add_edge(i, g.n() + i);
    return out;
}

inline Graph add_apex(const Graph& g) {
    if (g.has_vertex("apex"))
        throw parse_error("vertex name uses reserved apex name");
    Graph out;
    for (int i = 0; i < g.n(); ++i) out.add_vertex(g.vertex_name(i));
    int apex = out.add_vertex("apex");
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (int i = 0; i < g.n(); ++i) out.add_edge(apex, i);
    return out;
}

// ---- generators -------------------------------------------------------------

inline Graph gen_knn_minus_pm(int n) {
    if (n < 1) throw parse_error("n must be positive");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex("u" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_vertex("w" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.add_edge(i, n + j);
    return g;
}

// Random outerplanar graph: hull cycle of a polygon plus a random ear
// triangulation, with each chord kept independently with probability density.
inline Graph gen_random_outerplanar(int n, double density, uint64_t seed) {
    if (n < 1) throw parse_error("n must be positive");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
    if (n == 2) { g.add_edge(0, 1); return g; }
    if (n < 3) return g;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    std::mt19937_64 rng(seed ^ (static_cast<uint64_t>(n) << 32));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    // random triangulation of the polygon [0..n-1] by recursive splitting
    std::vector<std::pair<int, int>> chords;
    std::vector<std::pair<int, int>> stack{{0, n - 1}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        if (hi - lo < 2) continue;
        std::uniform_int_distribution<int> pick(lo + 1, hi - 1);
        int k = pick(rng);
        if (k - lo > 1 && !(lo == 0 && k == n - 1)) chords.emplace_back(lo, k);
        if (hi - k > 1 && !(k == 0 && hi == n - 1)) chords.emplace_back(k, hi);
        stack.emplace_back(lo, k);
        stack.emplace_back(k, hi);
    }
    for (auto [a, b] : chords)
        if (coin(rng) < density && !g.has_edge(a, b)) g.add_edge(a, b);
    return g;
}

}  // namespace orderdim

#endif
