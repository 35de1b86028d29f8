#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "copwidth/engine.hpp"
#include "copwidth/graph.hpp"
#include "copwidth/strategy.hpp"
#include "copwidth/tree_decomposition.hpp"

namespace copwidth {

struct SolveOptions {
    uint64_t max_states = uint64_t(1) << 27;
    bool dominance_pruning = false;  // drop A2 when a visited A1 ⊆ A2 shares the cop component
    int threads = 1;                 // frontier expansion parallelism; results are invocation-deterministic
};

struct DecideResult {
    bool winning = false;
    CopStrategy witness;
    uint64_t states_explored = 0;
};

namespace detail {

// Enumerate subsets of `cand` of size <= k in canonical order: by size, then
// lexicographically on the (sorted) candidate list. Deterministic witnesses
// depend on this order.
template <class F>
void for_each_subset(const std::vector<int>& cand, int k, F f) {
    int n = int(cand.size());
    k = std::min(k, n);
    std::vector<int> idx, subset;
    f(subset);  // empty set
    for (int sz = 1; sz <= k; ++sz) {
        idx.resize(sz);
        for (int i = 0; i < sz; ++i) idx[i] = i;
        while (true) {
            subset.clear();
            for (int i : idx) subset.push_back(cand[i]);
            f(subset);
            int i = sz - 1;
            while (i >= 0 && idx[i] == n - sz + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

struct SolverState {
    VertexSet a;  // contaminated set (V \ fc form for search)
    VertexSet c;  // previous cop set; meaningful for bcw r>1 and zerovis
    int parent = -1;
    std::vector<int> move;  // cop set used to reach this state
};

}  // namespace detail

/// Single-player reachability over contamination states: is there a winning
/// strategy with budget k? The search state is A alone for bcw radius 1,
/// hunt and search; (A, C_prev) for bcw with radius > 1 and for zerovis.
/// Start state is A = V with C_0 = ∅; the goal is A = ∅ (fc = V for search).
inline DecideResult decide(const Graph& g, GameKind kind, int radius, int k, const SolveOptions& opts = {}) {
    if (g.n() > 127) throw std::invalid_argument("decide: solver supports at most 127 vertices");
    if (k < 0 || k > g.n()) throw std::invalid_argument("decide: budget must be in [0, n]");
    if (kind == GameKind::Bcw && radius != kRadiusInf && radius < 1)
        throw std::invalid_argument("decide: bcw radius must be >= 1 or inf");

    const bool track_cops = (kind == GameKind::Bcw && radius != 1) || kind == GameKind::ZeroVis;
    const int n = g.n();
    const VertexSet empty(n);

    std::vector<detail::SolverState> states;
    std::unordered_map<VertexSet, int, VertexSetHash> seen_a;                       // when !track_cops
    std::unordered_map<std::pair<VertexSet, VertexSet>, int, VertexSetPairHash> seen_ac;  // when track_cops
    // dominance pruning bookkeeping: visited A sets grouped by cop component
    std::unordered_map<VertexSet, std::vector<VertexSet>, VertexSetHash> visited_by_c;

    auto known = [&](const VertexSet& a, const VertexSet& c) {
        return track_cops ? seen_ac.count({a, c}) > 0 : seen_a.count(a) > 0;
    };
    auto dominated = [&](const VertexSet& a, const VertexSet& c) {
        if (!opts.dominance_pruning) return false;
        auto it = visited_by_c.find(track_cops ? c : empty);
        if (it == visited_by_c.end()) return false;
        for (const VertexSet& prev : it->second)
            if (a.contains(prev)) return true;  // prev ⊆ a
        return false;
    };
    auto remember = [&](const VertexSet& a, const VertexSet& c, int id) {
        if (track_cops)
            seen_ac.emplace(std::make_pair(a, c), id);
        else
            seen_a.emplace(a, id);
        if (opts.dominance_pruning) visited_by_c[track_cops ? c : empty].push_back(a);
    };

    states.push_back({VertexSet::full(n), VertexSet(n), -1, {}});
    remember(states[0].a, states[0].c, 0);

    auto make_witness = [&](int goal_id) {
        CopStrategy w;
        w.kind = kind;
        w.radius = (kind == GameKind::Bcw) ? radius : 1;
        w.budget = k;
        std::vector<std::vector<int>> rev;
        for (int id = goal_id; id > 0; id = states[id].parent) rev.push_back(states[id].move);
        w.rounds.assign(rev.rbegin(), rev.rend());
        return w;
    };

    if (states[0].a.empty())  // n == 0
        return {true, make_witness(0), 1};

    // candidate cop placements for one state
    auto candidates = [&](const detail::SolverState& st) -> std::vector<int> {
        switch (kind) {
            case GameKind::Bcw: {
                if (radius == 1) return spread(g, st.a).to_vector();
                // A placement outside ball_2r(A) ∪ C_prev never helps: it is
                // not removed from A' (A' ⊆ ball_r(A)), it cannot block this
                // round (blocking needs C_prev ∩ C_next), and as a next-round
                // blocker it would have to lie on a short path from
                // A' ⊆ ball_r(A), i.e. inside ball_2r(A).
                int reach = radius == kRadiusInf ? kRadiusInf : std::min(2 * radius, g.n());
                return (ball(g, st.a, reach) | st.c).to_vector();
            }
            case GameKind::Hunt:
                return st.a.to_vector();  // shots outside A never shrink A \ S
            case GameKind::Search:
                return st.a.to_vector();  // state is V \ fc; S \ state is wasted
            case GameKind::ZeroVis: {
                std::vector<int> all(n);
                for (int v = 0; v < n; ++v) all[v] = v;
                return all;  // cops may need to stage anywhere
            }
        }
        return {};
    };

    auto successor = [&](const detail::SolverState& st, const std::vector<int>& cops,
                         VertexSet& out_a) -> bool {
        VertexSet c = VertexSet::from(n, cops);
        switch (kind) {
            case GameKind::Bcw:
                out_a = bcw_step(g, st.a, st.c, c, radius);
                return true;
            case GameKind::Hunt:
                out_a = hunt_step(g, st.a, c);
                return true;
            case GameKind::Search:
                out_a = spread(g, st.a - c);  // B' = (B \ S) ∪ N(B \ S); B = V \ fc
                return true;
            case GameKind::ZeroVis: {
                if (!zerovis_move_ok(g, st.c, c, k)) return false;
                VertexSet survivors = st.a - c;
                out_a = spread(g, survivors) - c;
                return true;
            }
        }
        return false;
    };

    struct Proposal {
        VertexSet a, c;
        int parent;
        std::vector<int> move;
    };

    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        // expand the whole BFS level; with threads > 1 the proposals are
        // produced in parallel but merged in frontier order, so the outcome
        // is identical for every thread count
        std::vector<std::vector<Proposal>> proposals(frontier.size());
        auto expand = [&](size_t lo, size_t hi) {
            for (size_t fi = lo; fi < hi; ++fi) {
                const detail::SolverState st = states[frontier[fi]];
                auto cand = candidates(st);
                detail::for_each_subset(cand, k, [&](const std::vector<int>& cops) {
                    VertexSet a2(n);
                    if (!successor(st, cops, a2)) return;
                    VertexSet c2 = VertexSet::from(n, cops);
                    if (track_cops) {
                        if (a2 == st.a && c2 == st.c) return;
                    } else if (a2 == st.a) {
                        return;
                    }
                    proposals[fi].push_back({std::move(a2), std::move(c2), frontier[fi], cops});
                });
            }
        };
        int nthreads = std::max(1, opts.threads);
        if (nthreads == 1 || frontier.size() < 4) {
            expand(0, frontier.size());
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (frontier.size() + nthreads - 1) / nthreads;
            for (int t = 0; t < nthreads; ++t) {
                size_t lo = t * chunk, hi = std::min(frontier.size(), lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(expand, lo, hi);
            }
            for (auto& th : pool) th.join();
        }

        std::vector<int> next;
        for (auto& bucket : proposals) {
            for (auto& p : bucket) {
                if (known(p.a, p.c) || dominated(p.a, p.c)) continue;
                int id = int(states.size());
                if (uint64_t(id) >= opts.max_states)
                    throw ResourceLimitError("decide: state cap of " + std::to_string(opts.max_states) +
                                             " states exceeded");
                states.push_back({p.a, track_cops ? p.c : empty, p.parent, p.move});
                remember(p.a, states.back().c, id);
                if (p.a.empty()) return {true, make_witness(id), states.size()};
                next.push_back(id);
            }
        }
        frontier = std::move(next);
    }
    return {false, {}, states.size()};
}

struct ComputeResult {
    int value = 0;
    CopStrategy witness;
};

/// Least k for which decide() finds a winning strategy. hunt/search/zerovis
/// ignore the radius.
inline ComputeResult compute(const Graph& g, GameKind kind, int radius = 1, const SolveOptions& opts = {}) {
    if (g.n() == 0) return {0, {}};
    for (int k = 1; k <= g.n(); ++k) {
        DecideResult r = decide(g, kind, radius, k, opts);
        if (r.winning) return {k, std::move(r.witness)};
    }
    throw std::logic_error("compute: no budget up to n wins; this cannot happen");
}

// ---------------------------------------------------------------------------
// Width oracles. Both are independent of the game solvers above: pathwidth
// via vertex-separation subset search, treewidth via elimination-order DP.
// ---------------------------------------------------------------------------

namespace detail {

inline int vs_boundary(const Graph& g, const VertexSet& s) {
    int b = 0;
    s.for_each([&](int v) {
        if (!s.contains(g.neighbor_mask(v))) ++b;
    });
    return b;
}

/// Is the vertex separation of G at most b? BFS over prefix sets with
/// boundary <= b. When some unplaced vertex has all neighbors placed it is
/// taken greedily: placing it never increases any later boundary.
inline bool vertex_separation_at_most(const Graph& g, int b, uint64_t max_states) {
    const int n = g.n();
    VertexSet full = VertexSet::full(n);
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> frontier{VertexSet(n)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (const VertexSet& s : frontier) {
            if (s == full) return true;
            int forced = -1;
            for (int v = 0; v < n && forced < 0; ++v)
                if (!s.test(v) && s.contains(g.neighbor_mask(v))) forced = v;
            int from = forced >= 0 ? forced : 0, to = forced >= 0 ? forced + 1 : n;
            for (int v = from; v < to; ++v) {
                if (s.test(v)) continue;
                VertexSet s2 = s;
                s2.set(v);
                if (vs_boundary(g, s2) > b) continue;
                if (s2 == full) return true;
                if (seen.insert(s2).second) {
                    if (seen.size() > max_states)
                        throw ResourceLimitError("pathwidth_oracle: state cap exceeded");
                    next.push_back(std::move(s2));
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace detail

/// Exact pathwidth (= vertex separation number).
inline int pathwidth_oracle(const Graph& g, uint64_t max_states = uint64_t(1) << 26) {
    if (g.n() == 0) return 0;
    for (int b = 0; b < g.n(); ++b)
        if (detail::vertex_separation_at_most(g, b, max_states)) return b;
    return g.n() - 1;
}

struct TreewidthResult {
    int width = 0;
    TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over elimination prefixes, with an
/// optimal elimination order recovered and turned into a tree decomposition.
inline TreewidthResult treewidth_oracle(const Graph& g, int max_n = 20) {
    const int n = g.n();
    if (n > max_n || n > 25) throw ResourceLimitError("treewidth_oracle: graph too large");
    if (n == 0) return {0, {}};
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= uint32_t(1) << v;
        adj[v] |= uint32_t(1) << u;
    }
    // q(X, v): vertices outside X∪{v} reachable from v through X
    auto q_count = [&](uint32_t x, int v) {
        uint32_t comp = uint32_t(1) << v, frontier = comp;
        while (frontier) {
            uint32_t nb = 0;
            uint32_t f = frontier;
            while (f) {
                int u = __builtin_ctz(f);
                f &= f - 1;
                nb |= adj[u];
            }
            frontier = nb & x & ~comp;
            comp |= frontier;
        }
        uint32_t nb = 0, c = comp;
        while (c) {
            int u = __builtin_ctz(c);
            c &= c - 1;
            nb |= adj[u];
        }
        return __builtin_popcount(nb & ~x & ~(uint32_t(1) << v));
    };
    std::vector<uint8_t> f(size_t(1) << n, 0);
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        int best = n;
        uint32_t it = s;
        while (it) {
            int v = __builtin_ctz(it);
            it &= it - 1;
            uint32_t rest = s & ~(uint32_t(1) << v);
            best = std::min(best, std::max(int(f[rest]), q_count(rest, v)));
        }
        f[s] = uint8_t(best);
    }
    int width = f[(size_t(1) << n) - 1];

    // recover an optimal elimination order (last eliminated first)
    std::vector<int> order(n);
    uint32_t s = (uint32_t(1) << n) - 1;
    for (int pos = n - 1; pos >= 0; --pos) {
        uint32_t it = s;
        int pick = -1;
        while (it) {
            int v = __builtin_ctz(it);
            it &= it - 1;
            uint32_t rest = s & ~(uint32_t(1) << v);
            if (std::max(int(f[rest]), q_count(rest, v)) == int(f[s])) {
                pick = v;
                break;  // smallest id achieving the optimum
            }
        }
        order[pos] = pick;
        s &= ~(uint32_t(1) << pick);
    }

    // simulate the elimination to build bags, then link each bag to the bag
    // of the first-later-eliminated vertex it contains
    std::vector<uint32_t> fill = adj;
    std::vector<int> pos_of(n);
    for (int i = 0; i < n; ++i) pos_of[order[i]] = i;
    TreeDecomposition td;
    td.nodes.resize(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        uint32_t nbrs = fill[v];
        std::vector<int> bag{v};
        uint32_t nb = nbrs;
        while (nb) {
            int u = __builtin_ctz(nb);
            nb &= nb - 1;
            bag.push_back(u);
        }
        std::sort(bag.begin(), bag.end());
        td.nodes[i].bag = std::move(bag);
        // make the neighborhood a clique and remove v
        uint32_t outer = nbrs;
        while (outer) {
            int u = __builtin_ctz(outer);
            outer &= outer - 1;
            fill[u] |= nbrs & ~(uint32_t(1) << u);
            fill[u] &= ~(uint32_t(1) << v);
        }
        // parent: bag of the earliest-eliminated later vertex in the bag
        int parent = -1, best_pos = n;
        for (int u : td.nodes[i].bag)
            if (u != v && pos_of[u] > i && pos_of[u] < best_pos) {
                best_pos = pos_of[u];
                parent = best_pos;
            }
        if (parent < 0 && i + 1 < n) parent = i + 1;  // disconnected piece: chain on
        td.nodes[i].parent = parent;
        if (parent >= 0) td.nodes[parent].children.push_back(i);
    }
    td.root = n - 1;
    return {width, std::move(td)};
}

}  // namespace copwidth
