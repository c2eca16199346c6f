#ifndef ORDERDIM_DIMENSION_HPP
#define ORDERDIM_DIMENSION_HPP

#include <algorithm>
#include <chrono>
#include <climits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "poset.hpp"

namespace orderdim {

// ---- reversibility of a set of incomparable pairs ----------------------------

// S is reversible iff lt together with {y < x : (x,y) in S} stays acyclic.
inline bool is_reversible(const Poset& p, const std::vector<std::pair<int, int>>& S) {
    for (auto [x, y] : S)
        if (p.comparable(x, y)) throw parse_error("pair is comparable in the poset");
    // reach[i] = {i} union everything above i under the extended relation
    std::vector<Bitset> reach(p.n(), Bitset(p.n()));
    for (int i = 0; i < p.n(); ++i) {
        reach[i] = p.up(i);
        reach[i].set(i);
    }
    for (auto [x, y] : S) {
        // add y < x
        if (reach[x].test(y)) return false;  // x <= y already: cycle
        if (reach[y].test(x)) continue;
        for (int a = 0; a < p.n(); ++a) {
            if (!reach[a].test(y)) continue;
            if (reach[a].test(x)) continue;
            if (reach[x].test(a)) return false;
            reach[a].or_with(reach[x]);
        }
    }
    return true;
}

// Alternating-cycle formulation: digraph on S with arc (x,y) -> (u,v) iff
// u <= y in p or u == y; S is non-reversible iff this digraph has a cycle.
inline bool has_alternating_cycle(const Poset& p,
                                  const std::vector<std::pair<int, int>>& S) {
    for (auto [x, y] : S)
        if (p.comparable(x, y)) throw parse_error("pair is comparable in the poset");
    int k = static_cast<int>(S.size());
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            int y = S[i].second, u = S[j].first;
            if (u == y || p.less(u, y)) adj[i].push_back(j);
        }
    // self-arc case: (x,y) with x <= y impossible (incomparable), so only cycles
    std::vector<int> state(k, 0);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < k; ++s) {
        if (state[s]) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < adj[v].size()) {
                int w = adj[v][idx++];
                if (state[w] == 1) return true;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

// ---- exact dimension ----------------------------------------------------------

struct DimCertificate {
    bool exact = false;
    int lower = 1;               // proven lower bound
    int upper = -1;              // best known upper bound (-1: none)
    int value() const { return exact ? lower : -1; }
    Realizer witness;            // |extensions| == value when exact
    uint64_t nodes = 0;
    int64_t elapsed_ms = 0;
    std::vector<std::vector<std::pair<int, int>>> classes;  // pair cover
};

namespace detail {

class DimSolver {
  public:
    DimSolver(const Poset& p, int64_t budget_ms)
        : p_(p), budget_ms_(budget_ms), start_(std::chrono::steady_clock::now()) {}

    DimCertificate solve() {
        DimCertificate cert;
        pairs_ = critical_pairs(p_);
        if (pairs_.empty()) {
            // chain (or empty poset): one extension suffices
            cert.exact = true;
            cert.lower = cert.upper = 1;
            cert.witness.extensions.push_back({topo_sort({})});
            cert.classes.emplace_back();
            finish(cert);
            return cert;
        }
        conflict_ = build_conflicts();
        sort_pairs_by_conflict_degree();
        int lb = std::max(2, greedy_clique());
        int ub = greedy_cover();
        for (int t = lb; t <= ub; ++t) {
            if (t == ub) break;  // greedy cover already witnesses ub
            assign_.assign(pairs_.size(), -1);
            classes_used_ = 0;
            class_pairs_.assign(t, {});
            reach_stack_.clear();
            bool found;
            try {
                found = search(t, 0);
            } catch (const budget_exceeded&) {
                cert.exact = false;
                cert.lower = t;  // every t' < t exhausted
                cert.upper = ub;
                cert.classes = greedy_classes_;
                build_witness(cert, greedy_classes_);
                finish(cert);
                return cert;
            }
            if (found) {
                cert.exact = true;
                cert.lower = cert.upper = t;
                cert.classes.assign(class_pairs_.begin(), class_pairs_.begin() + classes_used_);
                build_witness(cert, cert.classes);
                finish(cert);
                return cert;
            }
        }
        cert.exact = true;
        cert.lower = cert.upper = ub;
        cert.classes = greedy_classes_;
        build_witness(cert, greedy_classes_);
        finish(cert);
        return cert;
    }

    uint64_t nodes() const { return nodes_; }

  private:
    using Reach = std::vector<Bitset>;

    void finish(DimCertificate& cert) {
        cert.nodes = nodes_;
        cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start_)
                              .count();
    }

    void check_budget() {
        if (budget_ms_ < 0) return;
        if ((nodes_ & 0x3ff) != 0) return;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        if (ms > budget_ms_) throw budget_exceeded("dimension budget exceeded");
    }

    // conflict_[i][j]: pairs i and j cannot share a class
    std::vector<Bitset> build_conflicts() {
        size_t k = pairs_.size();
        std::vector<Bitset> c(k, Bitset(static_cast<int>(k)));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                if (!is_reversible(p_, {pairs_[i], pairs_[j]})) {
                    c[i].set(static_cast<int>(j));
                    c[j].set(static_cast<int>(i));
                }
        return c;
    }

    int greedy_clique() {
        size_t k = pairs_.size();
        std::vector<size_t> order(k);
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return conflict_[a].count() > conflict_[b].count();
        });
        std::vector<size_t> clique;
        for (size_t i : order) {
            bool ok = true;
            for (size_t j : clique)
                if (!conflict_[i].test(static_cast<int>(j))) { ok = false; break; }
            if (ok) clique.push_back(i);
        }
        return static_cast<int>(clique.size());
    }

    Reach fresh_reach() const {
        Reach r(p_.n(), Bitset(p_.n()));
        for (int i = 0; i < p_.n(); ++i) {
            r[i] = p_.up(i);
            r[i].set(i);
        }
        return r;
    }

    // add y < x to the class relation; false on cycle
    static bool reach_add(Reach& r, int x, int y) {
        if (r[x].test(y)) return false;
        if (r[y].test(x)) return true;
        int n = static_cast<int>(r.size());
        for (int a = 0; a < n; ++a) {
            if (!r[a].test(y) || r[a].test(x)) continue;
            r[a].or_with(r[x]);
        }
        return true;
    }

    // assigning the most conflicted pairs first focuses the search on the
    // constrained core; conflict bitsets are rebuilt to match the new order
    void sort_pairs_by_conflict_degree() {
        size_t k = pairs_.size();
        std::vector<size_t> order(k);
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return conflict_[a].count() > conflict_[b].count();
        });
        std::vector<std::pair<int, int>> np(k);
        std::vector<Bitset> nc(k, Bitset(static_cast<int>(k)));
        for (size_t i = 0; i < k; ++i) np[i] = pairs_[order[i]];
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                if (conflict_[order[i]].test(static_cast<int>(order[j])))
                    nc[i].set(static_cast<int>(j));
        pairs_ = std::move(np);
        conflict_ = std::move(nc);
    }

    int greedy_cover() {
        int best = greedy_cover_pass(pairs_);
        // fixed-seed randomized restarts often land on an optimal cover, which
        // lets the branch-and-bound skip straight to proving the lower bound
        std::mt19937_64 rng(0x0d1e5eed);
        std::vector<std::pair<int, int>> shuffled = pairs_;
        for (int restart = 0; restart < 24; ++restart) {
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            std::vector<std::vector<std::pair<int, int>>> saved = greedy_classes_;
            int got = greedy_cover_pass(shuffled);
            if (got < best) best = got;
            else greedy_classes_ = std::move(saved);
        }
        return best;
    }

    int greedy_cover_pass(const std::vector<std::pair<int, int>>& pairs) {
        greedy_classes_.clear();
        greedy_reaches_.clear();
        for (auto pr : pairs) {
            bool placed = false;
            for (size_t c = 0; c < greedy_reaches_.size(); ++c) {
                Reach trial = greedy_reaches_[c];
                if (reach_add(trial, pr.first, pr.second)) {
                    greedy_reaches_[c] = std::move(trial);
                    greedy_classes_[c].push_back(pr);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                greedy_reaches_.push_back(fresh_reach());
                reach_add(greedy_reaches_.back(), pr.first, pr.second);
                greedy_classes_.push_back({pr});
            }
        }
        return static_cast<int>(greedy_classes_.size());
    }

    // branch and bound: pick the unassigned pair with fewest feasible classes,
    // try existing classes then at most one fresh class
    bool search(int t, int depth) {
        ++nodes_;
        check_budget();
        if (depth == static_cast<int>(pairs_.size())) return true;
        int best = -1, best_feas = INT_MAX;
        std::vector<int> best_classes;
        for (size_t i = 0; i < pairs_.size(); ++i) {
            if (assign_[i] >= 0) continue;
            std::vector<int> feas;
            for (int c = 0; c < classes_used_; ++c) {
                if (conflicts_with_class(i, c)) continue;
                Reach trial = reach_stack_[c];
                if (reach_add(trial, pairs_[i].first, pairs_[i].second))
                    feas.push_back(c);
            }
            int options = static_cast<int>(feas.size()) + (classes_used_ < t ? 1 : 0);
            if (options == 0) return false;
            if (options < best_feas) {
                best_feas = options;
                best = static_cast<int>(i);
                best_classes = std::move(feas);
                if (options == 1) break;
            }
        }
        for (int c : best_classes) {
            Reach saved = reach_stack_[c];
            if (!reach_add(reach_stack_[c], pairs_[best].first, pairs_[best].second)) {
                reach_stack_[c] = std::move(saved);
                continue;
            }
            assign_[best] = c;
            class_pairs_[c].push_back(pairs_[best]);
            if (search(t, depth + 1)) return true;
            class_pairs_[c].pop_back();
            assign_[best] = -1;
            reach_stack_[c] = std::move(saved);
        }
        if (classes_used_ < t) {
            reach_stack_.push_back(fresh_reach());
            reach_add(reach_stack_.back(), pairs_[best].first, pairs_[best].second);
            assign_[best] = classes_used_;
            class_pairs_[classes_used_].push_back(pairs_[best]);
            ++classes_used_;
            if (search(t, depth + 1)) return true;
            --classes_used_;
            class_pairs_[classes_used_].clear();
            assign_[best] = -1;
            reach_stack_.pop_back();
        }
        return false;
    }

    bool conflicts_with_class(size_t i, int c) const {
        for (size_t j = 0; j < pairs_.size(); ++j)
            if (assign_[j] == c && conflict_[i].test(static_cast<int>(j))) return true;
        return false;
    }

    // topological sort of lt plus reversed class pairs, deterministic by index
    std::vector<int> topo_sort(const std::vector<std::pair<int, int>>& cls) const {
        int n = p_.n();
        std::vector<std::vector<int>> succ(n);
        std::vector<int> indeg(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p_.less(a, b)) {
                    succ[a].push_back(b);
                    ++indeg[b];
                }
        for (auto [x, y] : cls) {
            succ[y].push_back(x);
            ++indeg[x];
        }
        std::vector<int> out;
        std::vector<bool> done(n, false);
        for (int step = 0; step < n; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (!done[v] && indeg[v] == 0) { pick = v; break; }
            if (pick < 0) throw parse_error("internal error: class relation is cyclic");
            done[pick] = true;
            out.push_back(pick);
            for (int w : succ[pick]) --indeg[w];
        }
        return out;
    }

    void build_witness(DimCertificate& cert,
                       const std::vector<std::vector<std::pair<int, int>>>& classes) {
        cert.witness.extensions.clear();
        for (const auto& cls : classes)
            cert.witness.extensions.push_back({topo_sort(cls)});
        if (cert.witness.extensions.empty())
            cert.witness.extensions.push_back({topo_sort({})});
    }

    const Poset& p_;
    int64_t budget_ms_;
    std::chrono::steady_clock::time_point start_;
    uint64_t nodes_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<Bitset> conflict_;
    std::vector<int> assign_;
    int classes_used_ = 0;
    std::vector<std::vector<std::pair<int, int>>> class_pairs_;
    std::vector<Reach> reach_stack_;
    std::vector<std::vector<std::pair<int, int>>> greedy_classes_;
    std::vector<Reach> greedy_reaches_;
};

}  // namespace detail

inline DimCertificate exact_dimension(const Poset& p, int64_t budget_ms = 60'000) {
    if (p.n() == 0) {
        DimCertificate cert;
        cert.exact = true;
        cert.lower = cert.upper = 1;
        cert.witness.extensions.push_back({{}});
        cert.classes.emplace_back();
        return cert;
    }
    detail::DimSolver solver(p, budget_ms);
    return solver.solve();
}

// ---- brute-force oracle (posets up to 8 elements) -----------------------------

namespace detail {

inline void all_extensions(const Poset& p, std::vector<int>& cur,
                           std::vector<bool>& used,
                           std::vector<std::vector<int>>& out) {
    if (cur.size() == static_cast<size_t>(p.n())) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v < p.n(); ++v) {
        if (used[v]) continue;
        bool ready = true;
        for (int u = 0; u < p.n(); ++u)
            if (!used[u] && p.less(u, v)) { ready = false; break; }
        if (!ready) continue;
        used[v] = true;
        cur.push_back(v);
        all_extensions(p, cur, used, out);
        cur.pop_back();
        used[v] = false;
    }
}

inline bool cover_search(const std::vector<uint64_t>& masks, uint64_t need,
                         uint64_t covered, int left) {
    if (covered == need) return true;
    if (left == 0) return false;
    uint64_t missing = need & ~covered;
    int bit = __builtin_ctzll(missing);
    for (uint64_t m : masks) {
        if (!(m >> bit & 1)) continue;
        if (cover_search(masks, need, covered | m, left - 1)) return true;
    }
    return false;
}

}  // namespace detail

inline int brute_force_dimension(const Poset& p) {
    if (p.n() > 8) throw parse_error("brute_force_dimension: poset too large");
    if (p.n() == 0) return 1;
    std::vector<std::vector<int>> exts;
    std::vector<int> cur;
    std::vector<bool> used(p.n(), false);
    detail::all_extensions(p, cur, used, exts);
    // incomparable ordered pairs, indexed for 64-bit masks
    std::vector<std::pair<int, int>> inc;
    for (int a = 0; a < p.n(); ++a)
        for (int b = 0; b < p.n(); ++b)
            if (a != b && !p.comparable(a, b)) inc.emplace_back(a, b);
    if (inc.empty()) return 1;
    if (inc.size() > 64) throw parse_error("brute_force_dimension: too many pairs");
    std::vector<uint64_t> masks;
    for (const auto& e : exts) {
        std::vector<int> at(p.n());
        for (size_t i = 0; i < e.size(); ++i) at[e[i]] = static_cast<int>(i);
        uint64_t m = 0;
        for (size_t k = 0; k < inc.size(); ++k)
            if (at[inc[k].second] < at[inc[k].first]) m |= uint64_t(1) << k;
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    // drop masks dominated by another
    std::vector<uint64_t> maximal;
    for (uint64_t m : masks) {
        bool dom = false;
        for (uint64_t o : masks)
            if (o != m && (m & ~o) == 0) { dom = true; break; }
        if (!dom) maximal.push_back(m);
    }
    uint64_t need = (inc.size() == 64) ? ~uint64_t(0)
                                       : (uint64_t(1) << inc.size()) - 1;
    for (int t = 1; t <= p.n(); ++t)
        if (detail::cover_search(maximal, need, 0, t)) return t;
    throw parse_error("brute_force_dimension: no cover found");
}

// Exhaustive check that some single linear extension reverses all of S.
inline bool reversible_by_enumeration(const Poset& p,
                                      const std::vector<std::pair<int, int>>& S) {
    std::vector<std::vector<int>> exts;
    std::vector<int> cur;
    std::vector<bool> used(p.n(), false);
    detail::all_extensions(p, cur, used, exts);
    for (const auto& e : exts) {
        std::vector<int> at(p.n());
        for (size_t i = 0; i < e.size(); ++i) at[e[i]] = static_cast<int>(i);
        bool all = true;
        for (auto [x, y] : S)
            if (at[y] > at[x]) { all = false; break; }
        if (all) return true;
    }
    return false;
}

}  // namespace orderdim

#endif
