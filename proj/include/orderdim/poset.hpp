#ifndef ORDERDIM_POSET_HPP
#define ORDERDIM_POSET_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace orderdim {

// Fixed-width bitset over element indices; posets here are desk-scale.
struct Bitset {
    std::vector<uint64_t> w;

    explicit Bitset(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k] & ~o.w[k]) return false;
        return true;
    }
    void or_with(const Bitset& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
    }
    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool operator==(const Bitset& o) const { return w == o.w; }
};

// Strict partial order stored transitively closed.
// up[i] = elements strictly above i, down[i] = elements strictly below i.
class Poset {
  public:
    Poset() = default;

    explicit Poset(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (index_.count(names_[i]))
                throw parse_error("duplicate element name: " + names_[i]);
            index_[names_[i]] = static_cast<int>(i);
        }
        up_.assign(names_.size(), Bitset(n()));
        down_.assign(names_.size(), Bitset(n()));
    }

    int n() const { return static_cast<int>(names_.size()); }
    const std::string& element_name(int i) const { return names_[i]; }
    const std::vector<std::string>& element_names() const { return names_; }

    int element_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw parse_error("unknown element: " + name);
        return it->second;
    }

    bool less(int a, int b) const { return up_[a].test(b); }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    const Bitset& up(int i) const { return up_[i]; }
    const Bitset& down(int i) const { return down_[i]; }

    // insert a < b and restore transitive closure
    void add_less(int a, int b) {
        if (a == b || less(b, a))
            throw parse_error("relation would violate antisymmetry: " + names_[a] +
                              " < " + names_[b]);
        if (less(a, b)) return;
        for (int x = 0; x < n(); ++x) {
            if (x != a && !down_[a].test(x)) continue;
            // x <= a: everything >= b goes above x
            for (int y = 0; y < n(); ++y) {
                if (y != b && !up_[b].test(y)) continue;
                if (!up_[x].test(y)) {
                    up_[x].set(y);
                    down_[y].set(x);
                }
            }
        }
    }

    int height() const {  // longest chain, counted in elements
        std::vector<int> h(n(), -1);
        int best = 0;
        for (int i = 0; i < n(); ++i) best = std::max(best, chain_height(i, h));
        return best;
    }

    std::vector<std::pair<int, int>> relation_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n(); ++a)
            for (int b = 0; b < n(); ++b)
                if (less(a, b)) out.emplace_back(a, b);
        return out;
    }

  private:
    int chain_height(int i, std::vector<int>& memo) const {
        if (memo[i] >= 0) return memo[i];
        int best = 1;
        for (int j = 0; j < n(); ++j)
            if (less(j, i)) best = std::max(best, chain_height(j, memo) + 1);
        return memo[i] = best;
    }

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<Bitset> up_, down_;
};

// Min(v) renders as "v", Max(v) as "v'". The apostrophe is reserved.
inline std::string min_name(const std::string& v) { return v; }
inline std::string max_name(const std::string& v) { return v + "'"; }

inline Poset build_adjacency_poset(const Graph& g) {
    std::vector<std::string> names;
    for (int i = 0; i < g.n(); ++i) names.push_back(min_name(g.vertex_name(i)));
    for (int i = 0; i < g.n(); ++i) names.push_back(max_name(g.vertex_name(i)));
    Poset p(std::move(names));
    for (auto [a, b] : g.edges()) {
        p.add_less(a, g.n() + b);
        p.add_less(b, g.n() + a);
    }
    return p;
}

inline std::vector<std::pair<int, int>> critical_pairs(const Poset& p) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < p.n(); ++x)
        for (int y = 0; y < p.n(); ++y) {
            if (x == y || p.comparable(x, y)) continue;
            if (p.down(x).subset_of(p.down(y)) && p.up(y).subset_of(p.up(x)))
                out.emplace_back(x, y);
        }
    return out;
}

inline Poset induced_subposet(const Poset& p, const std::vector<int>& elems) {
    std::vector<std::string> names;
    for (int e : elems) {
        if (e < 0 || e >= p.n()) throw parse_error("unknown element index");
        names.push_back(p.element_name(e));
    }
    Poset out(std::move(names));
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j)
            if (p.less(elems[i], elems[j]))
                out.add_less(static_cast<int>(i), static_cast<int>(j));
    return out;
}

inline Poset gen_standard_example(int n) {
    if (n < 2) throw parse_error("standard example needs n >= 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    Poset p(std::move(names));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) p.add_less(i, n + j);
    return p;
}

// ---- linear extensions -------------------------------------------------------

struct LinearExtension {
    std::vector<int> seq;  // element indices in order
};

struct ExtensionCheck {
    bool ok;
    std::string detail;  // first violation or mismatch, empty when ok
};

inline ExtensionCheck is_linear_extension(const Poset& p, const std::vector<int>& seq) {
    if (static_cast<int>(seq.size()) != p.n())
        return {false, "sequence length " + std::to_string(seq.size()) +
                           " does not match poset size " + std::to_string(p.n())};
    std::vector<int> at(p.n(), -1);
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0 || seq[i] >= p.n() || at[seq[i]] >= 0)
            return {false, "sequence is not a permutation of the elements"};
        at[seq[i]] = static_cast<int>(i);
    }
    for (int a = 0; a < p.n(); ++a)
        for (int b = 0; b < p.n(); ++b)
            if (p.less(a, b) && at[a] > at[b])
                return {false, "violated pair (" + p.element_name(a) + ", " +
                                   p.element_name(b) + ")"};
    return {true, ""};
}

struct Realizer {
    std::vector<LinearExtension> extensions;
};

// ---- file formats -----------------------------------------------------------
// poset: `el <name>` lines then `lt <a> <b>` lines; closure applied on load.
// extension: one line of element names; realizer: one extension per line.

inline Poset parse_poset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> rels;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "poset") continue;
        if (tag == "el") {
            std::string name, extra;
            if (!(ls >> name) || (ls >> extra))
                throw parse_error("line " + std::to_string(lineno) + ": malformed el line");
            names.push_back(name);
        } else if (tag == "lt") {
            std::string a, b, extra;
            if (!(ls >> a >> b) || (ls >> extra))
                throw parse_error("line " + std::to_string(lineno) + ": malformed lt line");
            rels.emplace_back(a, b);
        } else {
            throw parse_error("line " + std::to_string(lineno) +
                              ": unrecognized record: " + tag);
        }
    }
    Poset p(std::move(names));
    for (auto& [a, b] : rels) p.add_less(p.element_index(a), p.element_index(b));
    return p;
}

inline std::string serialize_poset(const Poset& p, bool header = false) {
    std::ostringstream out;
    if (header) out << "poset\n";
    for (int i = 0; i < p.n(); ++i) out << "el " << p.element_name(i) << "\n";
    for (auto [a, b] : p.relation_pairs())
        out << "lt " << p.element_name(a) << " " << p.element_name(b) << "\n";
    return out.str();
}

inline std::vector<int> parse_extension(const Poset& p, const std::string& line) {
    std::istringstream in(line);
    std::string tok;
    std::vector<int> seq;
    while (in >> tok) seq.push_back(p.element_index(tok));
    return seq;
}

inline std::string serialize_extension(const Poset& p, const std::vector<int>& seq) {
    std::ostringstream out;
    for (size_t i = 0; i < seq.size(); ++i)
        out << (i ? " " : "") << p.element_name(seq[i]);
    out << "\n";
    return out.str();
}

}  // namespace orderdim

#endif
