#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

#include "copwidth/engine.hpp"
#include "copwidth/flip.hpp"
#include "copwidth/graph.hpp"
#include "copwidth/strategy.hpp"

namespace copwidth {

// Constructive strategy transformers between the blind games. Every output is
// re-verified by the engine before it is returned, so a failed construction
// surfaces as an exception, never as a silently wrong strategy.

namespace detail {

inline void require_win(const Graph& g, const CopStrategy& s, const char* who) {
    auto r = verify(g, s);
    if (r.status != VerifyStatus::Win)
        throw std::invalid_argument(std::string(who) + ": input strategy is not winning" +
                                    (r.status == VerifyStatus::Invalid ? " (" + r.reason + ")" : ""));
}

inline CopStrategy checked(const Graph& g, CopStrategy s, const char* who) {
    auto r = verify(g, s);
    if (r.status != VerifyStatus::Win)
        throw std::logic_error(std::string(who) + ": constructed strategy fails verification (" + r.reason + ")");
    return s;
}

/// BFS shortest path from s to t, ties broken toward smaller vertex ids.
inline std::vector<int> bfs_path(const Graph& g, int s, int t) {
    std::vector<int> par(g.n(), -2);
    par[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (par[w] == -2) {
                par[w] = u;
                q.push(w);
            }
    }
    if (par[t] == -2) throw std::invalid_argument("bfs_path: graph is disconnected");
    std::vector<int> path;
    for (int v = t; v != -1; v = par[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

/// Doubling the robber's speed with twice the cops: C'_i = C_{2i-1} ∪ C_{2i}
/// (odd length padded by repeating the final round). A radius-r win becomes
/// a radius-2r win with at most 2k cops.
inline CopStrategy double_speed(const Graph& g, const CopStrategy& s) {
    if (s.kind != GameKind::Bcw || s.radius == kRadiusInf || s.radius < 1)
        throw std::invalid_argument("double_speed: input must be a finite-radius bcw strategy");
    detail::require_win(g, s, "double_speed");
    std::vector<std::vector<int>> rounds = s.rounds;
    if (rounds.size() % 2) rounds.push_back(rounds.back());
    CopStrategy out;
    out.kind = GameKind::Bcw;
    out.radius = 2 * s.radius;
    out.budget = 2 * s.budget;
    for (size_t i = 0; i < rounds.size(); i += 2) {
        std::vector<int> merged = rounds[i];
        merged.insert(merged.end(), rounds[i + 1].begin(), rounds[i + 1].end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        out.rounds.push_back(std::move(merged));
    }
    return detail::checked(g, std::move(out), "double_speed");
}

/// Hunters to blind cops: C_i = N[S_i] wins the radius-1 game with at most
/// (Δ+1)·k cops. Requires a graph without isolated vertices.
inline CopStrategy hunter_to_cop(const Graph& g, const CopStrategy& s) {
    if (s.kind != GameKind::Hunt) throw std::invalid_argument("hunter_to_cop: input must be a hunt strategy");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("hunter_to_cop: graph has isolated vertices");
    detail::require_win(g, s, "hunter_to_cop");
    CopStrategy out;
    out.kind = GameKind::Bcw;
    out.radius = 1;
    out.budget = (g.max_degree() + 1) * s.budget;
    for (const auto& round : s.rounds) {
        VertexSet c = VertexSet::from(g.n(), round);
        out.rounds.push_back(spread(g, c).to_vector());
    }
    return detail::checked(g, std::move(out), "hunter_to_cop");
}

/// Zero-visibility cops to blind cops: C_i = S_i ∪ S_{i+1} (with S_{ℓ+1} = ∅)
/// wins the radius-1 game with at most 2k cops.
inline CopStrategy zerovis_to_cop(const Graph& g, const CopStrategy& s) {
    if (s.kind != GameKind::ZeroVis) throw std::invalid_argument("zerovis_to_cop: input must be zerovis");
    detail::require_win(g, s, "zerovis_to_cop");
    CopStrategy out;
    out.kind = GameKind::Bcw;
    out.radius = 1;
    out.budget = 2 * s.budget;
    for (int i = 0; i < s.length(); ++i) {
        std::vector<int> c = s.rounds[i];
        if (i + 1 < s.length()) c.insert(c.end(), s.rounds[i + 1].begin(), s.rounds[i + 1].end());
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        out.rounds.push_back(std::move(c));
    }
    return detail::checked(g, std::move(out), "zerovis_to_cop");
}

/// Blind cops to zero-visibility cops on a connected graph of diameter d:
/// a strategy winning against a speed-d robber is replayed by 2k walking
/// cops, one team camping on S_{i-1} while the other walks (<= d steps along
/// BFS shortest paths, ties toward smaller ids) from S_{i-2} to S_i.
inline CopStrategy cop_to_zerovis(const Graph& g, const CopStrategy& s) {
    if (s.kind != GameKind::Bcw) throw std::invalid_argument("cop_to_zerovis: input must be a bcw strategy");
    auto diam = g.diameter();
    if (!diam) throw std::invalid_argument("cop_to_zerovis: graph must be connected");
    int d = std::max(1, *diam);
    // the replay is valid against a speed-d robber, so the input must win at radius d
    CopStrategy at_d = s;
    at_d.radius = d;
    detail::require_win(g, at_d, "cop_to_zerovis (at graph diameter)");
    if (s.length() == 0) throw std::invalid_argument("cop_to_zerovis: empty strategy");

    CopStrategy out;
    out.kind = GameKind::ZeroVis;
    out.radius = 1;
    out.budget = 2 * s.budget;
    auto round_set = [&](int i) { return s.rounds[std::min<int>(i, s.length() - 1)]; };

    // Two teams of k tokens; team parity i sits on S_{i+1} after phase i.
    int k = std::max(1, s.budget);
    std::vector<std::vector<int>> team(2);
    auto place = [&](int t, const std::vector<int>& on) {
        team[t].clear();
        for (int j = 0; j < k; ++j) team[t].push_back(on.empty() ? 0 : on[j % on.size()]);
    };
    place(0, round_set(0));
    place(1, round_set(1));
    auto emit = [&]() {
        std::vector<int> c = team[0];
        c.insert(c.end(), team[1].begin(), team[1].end());
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        out.rounds.push_back(std::move(c));
    };
    emit();  // round 1: both teams land on S_1 ∪ S_2
    for (int i = 3; i <= s.length(); ++i) {
        int mover = (i - 1) % 2;  // the team currently on S_{i-2}
        const std::vector<int> targets = round_set(i - 1);
        std::vector<std::vector<int>> walks(k);
        for (int j = 0; j < k; ++j)
            walks[j] = detail::bfs_path(g, team[mover][j], targets.empty() ? team[mover][j] : targets[j % targets.size()]);
        for (int step = 1; step <= d; ++step) {
            for (int j = 0; j < k; ++j)
                team[mover][j] = walks[j][std::min<size_t>(step, walks[j].size() - 1)];
            emit();
        }
    }
    return detail::checked(g, std::move(out), "cop_to_zerovis");
}

/// Blind cops to a blind flipper: round i uses the partition made of the
/// singletons of C_i plus the classes of V \ C_i by neighborhood inside C_i,
/// and flips exactly the part pairs that meet an edge incident to a cop.
/// The flipped graph is G minus all edges incident to C_i; the part count is
/// at most k + 2^k.
inline FlipStrategy cop_to_flip(const Graph& g, const CopStrategy& s) {
    if (s.kind != GameKind::Bcw) throw std::invalid_argument("cop_to_flip: input must be a bcw strategy");
    detail::require_win(g, s, "cop_to_flip");
    FlipStrategy out;
    out.radius = s.radius == kRadiusInf ? g.n() : s.radius;
    for (const auto& round : s.rounds) {
        FlipRound fr;
        fr.part_of.assign(g.n(), -1);
        std::vector<int> cops = round;
        for (size_t i = 0; i < cops.size(); ++i) fr.part_of[cops[i]] = int(i);
        VertexSet cop_set = VertexSet::from(g.n(), cops);
        std::map<std::vector<int>, int> class_of;  // neighborhood-in-C profile -> part id
        for (int v = 0; v < g.n(); ++v) {
            if (cop_set.test(v)) continue;
            std::vector<int> profile;
            for (int c : cops)
                if (g.has_edge(v, c)) profile.push_back(c);
            auto [it, fresh] = class_of.emplace(profile, int(cops.size() + class_of.size()));
            fr.part_of[v] = it->second;
        }
        // flips: cop-cop pairs joined by an edge; cop-class pairs where the
        // class's profile contains the cop
        for (size_t i = 0; i < cops.size(); ++i)
            for (size_t j = i + 1; j < cops.size(); ++j)
                if (g.has_edge(cops[i], cops[j])) fr.flips.push_back({int(i), int(j)});
        for (const auto& [profile, part] : class_of)
            for (int c : profile) {
                int ci = int(std::find(cops.begin(), cops.end(), c) - cops.begin());
                fr.flips.push_back({std::min(ci, part), std::max(ci, part)});
            }
        std::sort(fr.flips.begin(), fr.flips.end());
        out.rounds.push_back(std::move(fr));
    }
    FlipTrace t = flip_simulate(g, out);
    if (!t.win) throw std::logic_error("cop_to_flip: constructed flip strategy fails verification");
    return out;
}

/// Blind flipper (radius 3) to blind cops on a graph of max degree Δ: stand
/// on every vertex of a flipped part of size at most 2(Δ+1) and on all their
/// neighbors; at most 2k(Δ+1)^2 cops win at radius 1. "Flipped part" is read
/// as "part incident to some flip pair of the round" (loops included).
inline CopStrategy flip_to_cop(const Graph& g, const FlipStrategy& s) {
    if (s.radius < 3) throw std::invalid_argument("flip_to_cop: flip strategy must have radius >= 3");
    FlipTrace t = flip_simulate(g, s);
    if (!t.win) throw std::invalid_argument("flip_to_cop: input flip strategy is not winning");
    int cap = 2 * (g.max_degree() + 1);
    CopStrategy out;
    out.kind = GameKind::Bcw;
    out.radius = 1;
    out.budget = 2 * s.width() * (g.max_degree() + 1) * (g.max_degree() + 1);
    for (const auto& round : s.rounds) {
        int p = round.width();
        std::vector<char> flipped(p, 0);
        for (auto [a, b] : round.flips) flipped[a] = flipped[b] = 1;
        std::vector<int> part_size(p, 0);
        for (int v = 0; v < g.n(); ++v) ++part_size[round.part_of[v]];
        VertexSet c(g.n());
        for (int v = 0; v < g.n(); ++v) {
            int part = round.part_of[v];
            if (flipped[part] && part_size[part] <= cap) {
                c.set(v);
                c |= g.neighbor_mask(v);
            }
        }
        out.rounds.push_back(c.to_vector());
    }
    return detail::checked(g, std::move(out), "flip_to_cop");
}

}  // namespace copwidth
