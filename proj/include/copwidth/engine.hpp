#pragma once

#include <string>
#include <vector>

#include "copwidth/graph.hpp"
#include "copwidth/strategy.hpp"
#include "copwidth/vertex_set.hpp"

namespace copwidth {

// Set dynamics for the four blind games. Everything here is a pure function
// of the graph and the cop sets; the contaminated set A_i is the set of
// vertices the robber could occupy after round i, with A_0 = V and C_0 = ∅.

/// One bcw round: A' = { u ∉ C_next : G \ (C_prev ∩ C_next) has a path of
/// length <= r from A to u }. Length-0 paths are allowed (the robber may
/// stand still). r = kRadiusInf uses connectivity; r = 1 reduces to
/// (A ∪ N(A)) \ C_next and is independent of C_prev.
inline VertexSet bcw_step(const Graph& g, const VertexSet& a, const VertexSet& c_prev, const VertexSet& c_next,
                          int radius) {
    if (radius != kRadiusInf && radius < 1) throw std::invalid_argument("bcw_step: radius must be >= 1 or inf");
    if (radius == 1) return spread(g, a) - c_next;
    VertexSet blocked = c_prev & c_next;
    return ball(g, a, radius, blocked) - c_next;
}

/// One hunters-and-rabbit round: the robber is shot at S and then must move,
/// so A' = N(A \ S).
inline VertexSet hunt_step(const Graph& g, const VertexSet& a, const VertexSet& s) {
    VertexSet survivors = a - s;
    VertexSet out(g.n());
    survivors.for_each([&](int v) { out |= g.neighbor_mask(v); });
    return out;
}

/// Pre-cleared / fully-cleared sequences of a k-search:
/// fc_0 = ∅, pc_i = fc_{i-1} ∪ S_i, fc_i = pc_i \ N(V \ pc_i).
struct SearchTrace {
    std::vector<VertexSet> pre_cleared;    // pc_1..pc_m
    std::vector<VertexSet> fully_cleared;  // fc_0..fc_m
    bool success = false;                  // fc_m == V
};

inline SearchTrace search_trace(const Graph& g, const std::vector<std::vector<int>>& rounds) {
    SearchTrace t;
    VertexSet all = VertexSet::full(g.n());
    VertexSet fc(g.n());
    t.fully_cleared.push_back(fc);
    for (const auto& s : rounds) {
        VertexSet pc = fc | VertexSet::from(g.n(), s);
        fc = pc - neighborhood(g, all - pc);
        t.pre_cleared.push_back(pc);
        t.fully_cleared.push_back(fc);
    }
    t.success = (fc == all);
    return t;
}

/// Whether k cops standing on exactly c_prev can move (speed 1, stacking
/// allowed) so that they stand on exactly c_next. Feasible iff every vertex
/// on either side has a partner at distance <= 1 and the minimum edge cover
/// of the compatibility graph uses at most k cops.
inline bool zerovis_move_ok(const Graph& g, const VertexSet& c_prev, const VertexSet& c_next, int k) {
    std::vector<int> from = c_prev.to_vector(), to = c_next.to_vector();
    if (int(from.size()) > k || int(to.size()) > k) return false;
    if (from.empty()) return true;  // initial placement
    if (to.empty()) return from.empty();
    auto compatible = [&](int u, int v) { return u == v || g.has_edge(u, v); };
    for (int u : from) {
        bool ok = false;
        for (int v : to) ok = ok || compatible(u, v);
        if (!ok) return false;
    }
    for (int v : to) {
        bool ok = false;
        for (int u : from) ok = ok || compatible(u, v);
        if (!ok) return false;
    }
    // Maximum bipartite matching (Kuhn); sizes here are tiny.
    std::vector<int> match_to(to.size(), -1);
    std::vector<char> used;
    auto try_kuhn = [&](auto&& self, int ui) -> bool {
        for (size_t vi = 0; vi < to.size(); ++vi) {
            if (used[vi] || !compatible(from[ui], to[vi])) continue;
            used[vi] = 1;
            if (match_to[vi] < 0 || self(self, match_to[vi])) {
                match_to[vi] = ui;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (size_t ui = 0; ui < from.size(); ++ui) {
        used.assign(to.size(), 0);
        if (try_kuhn(try_kuhn, int(ui))) ++matching;
    }
    int edge_cover = int(from.size() + to.size()) - matching;
    return edge_cover <= k;
}

/// Per-round contaminated sets plus (for search semantics) pc/fc.
struct GameTrace {
    std::vector<VertexSet> contaminated;   // A_0..A_m
    std::vector<VertexSet> pre_cleared;    // search only
    std::vector<VertexSet> fully_cleared;  // search only
    bool win = false;
    int first_violation = -1;  // round index of the violated constraint, if any
    std::string reason;
};

enum class VerifyStatus { Win, Lose, Invalid };

struct VerifyResult {
    VerifyStatus status = VerifyStatus::Invalid;
    GameTrace trace;
    VertexSet residual;  // final contaminated set on Lose
    std::string reason;
};

/// Zero-visibility dynamics: cops announce and move (capture on landing),
/// then the robber moves one step but cannot pass through or stop on an
/// occupied vertex: A'_i = A_{i-1} \ C_i, A_i = (A'_i ∪ N(A'_i)) \ C_i.
/// The movement invariant between consecutive rounds must already hold.
/// (Since the robber set is blind, whether cops announce their landing spots
/// is immaterial; the one free choice in the formalization is that an
/// occupied vertex blocks the robber's move phase, i.e. the final \ C_i.)
inline GameTrace zerovis_simulate(const Graph& g, const CopStrategy& s) {
    GameTrace t;
    VertexSet c_prev(g.n());
    for (int i = 0; i < s.length(); ++i) {
        VertexSet c = VertexSet::from(g.n(), s.rounds[i]);
        if (!zerovis_move_ok(g, c_prev, c, s.budget))
            throw std::invalid_argument("zerovis_simulate: movement constraint violated at round " +
                                        std::to_string(i + 1));
        c_prev = c;
    }
    VertexSet a = VertexSet::full(g.n());
    t.contaminated.push_back(a);
    for (int i = 0; i < s.length(); ++i) {
        VertexSet c = VertexSet::from(g.n(), s.rounds[i]);
        VertexSet survivors = a - c;
        a = spread(g, survivors) - c;
        t.contaminated.push_back(a);
        if (a.empty()) break;
    }
    t.win = t.contaminated.back().empty();
    return t;
}

/// Full verification: budget and movement invariants first, then the
/// dynamics of the declared game.
inline VerifyResult verify(const Graph& g, const CopStrategy& s) {
    VerifyResult res;
    res.residual = VertexSet(g.n());
    for (int i = 0; i < s.length(); ++i) {
        for (int v : s.rounds[i])
            if (v < 0 || v >= g.n()) {
                res.reason = "vertex id out of range at round " + std::to_string(i + 1);
                res.trace.first_violation = i + 1;
                return res;
            }
        if (int(s.rounds[i].size()) > s.budget) {
            res.reason = "budget exceeded at round " + std::to_string(i + 1);
            res.trace.first_violation = i + 1;
            return res;
        }
    }
    if (s.kind == GameKind::Bcw && s.radius != kRadiusInf && s.radius < 1) {
        res.reason = "bcw radius must be >= 1 or inf";
        return res;
    }
    if (s.kind == GameKind::ZeroVis) {
        VertexSet c_prev(g.n());
        for (int i = 0; i < s.length(); ++i) {
            VertexSet c = VertexSet::from(g.n(), s.rounds[i]);
            if (!zerovis_move_ok(g, c_prev, c, s.budget)) {
                res.reason = "zerovis movement constraint violated at round " + std::to_string(i + 1);
                res.trace.first_violation = i + 1;
                return res;
            }
            c_prev = c;
        }
    }

    GameTrace& t = res.trace;
    VertexSet all = VertexSet::full(g.n());
    switch (s.kind) {
        case GameKind::Bcw: {
            VertexSet a = all, c_prev(g.n());
            t.contaminated.push_back(a);
            for (int i = 0; i < s.length(); ++i) {
                VertexSet c = VertexSet::from(g.n(), s.rounds[i]);
                a = bcw_step(g, a, c_prev, c, s.radius);
                t.contaminated.push_back(a);
                c_prev = c;
            }
            t.win = t.contaminated.back().empty();
            break;
        }
        case GameKind::Hunt: {
            VertexSet a = all;
            t.contaminated.push_back(a);
            for (int i = 0; i < s.length(); ++i) {
                a = hunt_step(g, a, VertexSet::from(g.n(), s.rounds[i]));
                t.contaminated.push_back(a);
            }
            t.win = t.contaminated.back().empty();
            break;
        }
        case GameKind::Search: {
            SearchTrace st = search_trace(g, s.rounds);
            t.pre_cleared = st.pre_cleared;
            t.fully_cleared = st.fully_cleared;
            // contaminated mirrors V \ pc for convenience
            t.contaminated.push_back(all);
            for (const auto& pc : st.pre_cleared) t.contaminated.push_back(all - pc);
            t.win = st.success;
            break;
        }
        case GameKind::ZeroVis: {
            t = zerovis_simulate(g, s);
            break;
        }
    }
    if (t.win) {
        res.status = VerifyStatus::Win;
    } else {
        res.status = VerifyStatus::Lose;
        res.residual = t.contaminated.back();
        res.reason = "residual contaminated set " + res.residual.to_string();
    }
    return res;
}

}  // namespace copwidth
