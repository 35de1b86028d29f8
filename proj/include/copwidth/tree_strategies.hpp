#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "copwidth/engine.hpp"
#include "copwidth/graph.hpp"
#include "copwidth/minors.hpp"
#include "copwidth/strategy.hpp"
#include "copwidth/tree_decomposition.hpp"

namespace copwidth {

// Strategy synthesis on subdivisions. A graph of treewidth k has a
// subdivision on which k+3 blind cops win at radius 1; the subdivision
// lengths come from the join structure of a nice tree decomposition and the
// strategy follows the decomposition bottom-up. Every constructed strategy is
// engine-verified before it is returned: a verification failure here is a
// construction bug and raises logic_error, never a user error.

namespace detail {

struct NiceTdInfo {
    std::vector<int> postorder;
    std::vector<VertexSet> vertices_below;       // V_u
    std::vector<long long> subtree_nodes;        // |V(T[u])|
};

inline NiceTdInfo analyze_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
    const auto& nodes = ntd.td.nodes;
    NiceTdInfo info;
    info.vertices_below.assign(nodes.size(), VertexSet(g.n()));
    info.subtree_nodes.assign(nodes.size(), 0);
    // iterative postorder
    std::vector<std::pair<int, int>> stack{{ntd.td.root, 0}};
    while (!stack.empty()) {
        auto& [u, stage] = stack.back();
        if (stage < int(nodes[u].children.size())) {
            int c = nodes[u].children[stage++];
            stack.push_back({c, 0});
            continue;
        }
        VertexSet below(g.n());
        long long cnt = 1;
        for (int v : nodes[u].bag) below.set(v);
        for (int c : nodes[u].children) {
            below |= info.vertices_below[c];
            cnt += info.subtree_nodes[c];
        }
        info.vertices_below[u] = std::move(below);
        info.subtree_nodes[u] = cnt;
        info.postorder.push_back(u);
        stack.pop_back();
    }
    return info;
}

}  // namespace detail

inline constexpr long long kDefaultTreesubCap = 2'000'000;

/// Per-edge subdivision lengths satisfying, at every join node a with left
/// child b and right child c and every edge e joining the bag to the right
/// subtree,  ℓ(e) >= 2^{|E_{a,c}|} · |V(T[b])| · (1 + Σ_{f ∈ I_{a,b}} (ℓ(f)−1)).
/// The constraints form a DAG on edges (left subtrees feed right subtrees of
/// the same join); lengths are assigned in topological order as the max of 1
/// and all applicable right-hand sides.
inline std::vector<long long> subdivision_lengths(const Graph& g, const NiceTreeDecomposition& ntd,
                                                  long long size_cap = kDefaultTreesubCap) {
    TdCheck chk = verify_nice(g, ntd);
    if (!chk.ok) throw std::invalid_argument("subdivision_lengths: invalid nice decomposition: " + chk.violation);
    auto info = detail::analyze_nice(g, ntd);
    const auto& nodes = ntd.td.nodes;

    struct JoinConstraint {
        std::vector<int> sources;  // I_{a,b}: edges feeding the bound
        std::vector<int> targets;  // E_{a,c}: edges receiving the bound
        long long left_nodes;      // |V(T[b])|
    };
    std::vector<JoinConstraint> joins;
    for (size_t a = 0; a < nodes.size(); ++a) {
        if (ntd.kind[a] != NodeKind::Join) continue;
        int b = nodes[a].children[0], c = nodes[a].children[1];
        VertexSet bag(g.n());
        for (int v : nodes[a].bag) bag.set(v);
        VertexSet left_below = info.vertices_below[b] - bag;    // V_b \ X_a
        VertexSet right_below = info.vertices_below[c] - bag;   // V_c \ X_a
        JoinConstraint jc;
        jc.left_nodes = info.subtree_nodes[b];
        for (int e = 0; e < g.m(); ++e) {
            auto [x, y] = g.edges()[e];
            if (left_below.test(x) || left_below.test(y)) jc.sources.push_back(e);
            if ((bag.test(x) && right_below.test(y)) || (bag.test(y) && right_below.test(x)))
                jc.targets.push_back(e);
        }
        joins.push_back(std::move(jc));
    }

    // dependency DAG over edges; the proof guarantees acyclicity
    std::vector<std::vector<int>> dependents(g.m());
    std::vector<int> indeg(g.m(), 0);
    for (const auto& jc : joins)
        for (int f : jc.sources)
            for (int e : jc.targets)
                if (f != e) {
                    dependents[f].push_back(e);
                    ++indeg[e];
                } else {
                    throw std::logic_error("subdivision_lengths: edge depends on itself");
                }
    std::vector<int> topo;
    for (int e = 0; e < g.m(); ++e)
        if (indeg[e] == 0) topo.push_back(e);
    for (size_t i = 0; i < topo.size(); ++i)
        for (int e : dependents[topo[i]])
            if (--indeg[e] == 0) topo.push_back(e);
    if (int(topo.size()) != g.m())
        throw std::logic_error("subdivision_lengths: dependency cycle; invariant violated");

    std::vector<long long> len(g.m(), 1);
    for (int e : topo) {
        unsigned __int128 best = 1;
        for (const auto& jc : joins) {
            if (std::find(jc.targets.begin(), jc.targets.end(), e) == jc.targets.end()) continue;
            unsigned __int128 sum = 1;
            for (int f : jc.sources) sum += len[f] - 1;
            unsigned __int128 rhs = sum * (unsigned __int128)jc.left_nodes;
            for (size_t s = 0; s < jc.targets.size(); ++s) {
                rhs *= 2;
                if (rhs > (unsigned __int128)size_cap)
                    throw ResourceLimitError("subdivision_lengths: lengths exceed the size cap");
            }
            best = std::max(best, rhs);
        }
        len[e] = (long long)best;
    }
    long long total = g.n();
    for (long long l : len) {
        total += l - 1;
        if (total > size_cap) throw ResourceLimitError("subdivision_lengths: total size exceeds the cap");
    }
    return len;
}

struct TreesubResult {
    Graph subdivision;       // H
    SubdivisionMap map;
    CopStrategy strategy;    // radius-1 win on H with <= width+3 cops
    std::vector<long long> lengths;
};

/// Build H = subdivide(G, ℓ) and the recursive start/introduce/forget/join
/// strategy on it. Per-node round counts satisfy
/// m_u <= |V(T[u])| · (1 + |V'_u| − |V_u|) and every round uses at most
/// width+3 cops; both are asserted during construction.
inline TreesubResult treesub_strategy(const Graph& g, const NiceTreeDecomposition& ntd,
                                      long long size_cap = kDefaultTreesubCap) {
    TdCheck chk = verify_nice(g, ntd);
    if (!chk.ok) throw std::invalid_argument("treesub_strategy: invalid nice decomposition: " + chk.violation);
    if (g.n() == 0) throw std::invalid_argument("treesub_strategy: empty graph");
    TreesubResult out;
    out.lengths = subdivision_lengths(g, ntd, size_cap);
    auto [h, map] = subdivide(g, out.lengths, size_cap);
    out.subdivision = std::move(h);
    out.map = std::move(map);

    auto info = detail::analyze_nice(g, ntd);
    const auto& nodes = ntd.td.nodes;
    const int width = ntd.td.width();

    // |V'_u| - |V_u| = total internal path vertices of edges inside V_u but
    // not inside X_u
    auto extra_of = [&](int u) {
        long long extra = 0;
        VertexSet bag(g.n());
        for (int v : nodes[u].bag) bag.set(v);
        for (int e = 0; e < g.m(); ++e) {
            auto [x, y] = g.edges()[e];
            if (!info.vertices_below[u].test(x) || !info.vertices_below[u].test(y)) continue;
            if (bag.test(x) && bag.test(y)) continue;
            extra += out.lengths[e] - 1;
        }
        return extra;
    };

    std::vector<std::vector<std::vector<int>>> seq(nodes.size());
    for (int u : info.postorder) {
        const std::vector<int>& bag = nodes[u].bag;
        auto push_round = [&](std::vector<int> extra_vertices) {
            std::vector<int> round = bag;
            round.insert(round.end(), extra_vertices.begin(), extra_vertices.end());
            std::sort(round.begin(), round.end());
            round.erase(std::unique(round.begin(), round.end()), round.end());
            seq[u].push_back(std::move(round));
        };
        switch (ntd.kind[u]) {
            case NodeKind::Start:
                push_round({});
                break;
            case NodeKind::Introduce: {
                int v = nodes[u].children[0];
                push_round({});
                seq[u].insert(seq[u].end(), seq[v].begin() + 1, seq[v].end());
                break;
            }
            case NodeKind::Forget: {
                int v = nodes[u].children[0];
                const auto& child_bag = nodes[v].bag;
                int p = -1;
                for (int x : child_bag)
                    if (!std::binary_search(bag.begin(), bag.end(), x)) p = x;
                // freed internal vertices: the paths of child-bag edges at p,
                // each walked from p outward, edges in sorted order
                std::vector<int> freed;
                for (int x : child_bag) {
                    if (x == p) continue;
                    int e = g.edge_index(p, x);
                    if (e < 0) continue;
                    auto internals = path_internals_from(out.map, e, p);
                    freed.insert(freed.end(), internals.begin(), internals.end());
                }
                push_round({});  // C_{u,1} = X_u
                if (int(freed.size()) <= 2) {
                    std::vector<int> second = child_bag;
                    second.insert(second.end(), freed.begin(), freed.end());
                    std::sort(second.begin(), second.end());
                    seq[u].push_back(std::move(second));
                } else {
                    for (size_t i = 0; i + 1 < freed.size(); ++i) {
                        std::vector<int> round = child_bag;
                        round.push_back(freed[i]);
                        round.push_back(freed[i + 1]);
                        std::sort(round.begin(), round.end());
                        seq[u].push_back(std::move(round));
                    }
                }
                seq[u].insert(seq[u].end(), seq[v].begin() + 1, seq[v].end());
                break;
            }
            case NodeKind::Join: {
                int v = nodes[u].children[0], w = nodes[u].children[1];
                VertexSet bagset(g.n());
                for (int x : bag) bagset.set(x);
                VertexSet right_below = info.vertices_below[w] - bagset;
                // E_{u,w} with the bag endpoint of each edge
                std::vector<std::pair<int, int>> cross;  // (edge, bag endpoint)
                for (int e = 0; e < g.m(); ++e) {
                    auto [x, y] = g.edges()[e];
                    if (bagset.test(x) && right_below.test(y)) cross.push_back({e, x});
                    else if (bagset.test(y) && right_below.test(x)) cross.push_back({e, y});
                }
                long long q = (long long)cross.size();
                long long m_left = (long long)seq[v].size();
                long long big_m = info.subtree_nodes[v] * (1 + extra_of(v));
                if (m_left > big_m) throw std::logic_error("treesub_strategy: left subtree length bound broken");
                // sweep the first 2^{q-i} M internal vertices of each crossing
                // path, one pair of cops per round
                std::vector<int> sweep;
                for (long long i = 0; i < q; ++i) {
                    auto [e, x] = cross[i];
                    auto internals = path_internals_from(out.map, e, x);
                    long long quota = (1ll << (q - 1 - i)) * big_m;
                    if (quota > (long long)internals.size())
                        throw std::logic_error("treesub_strategy: path shorter than its sweep quota");
                    sweep.insert(sweep.end(), internals.begin(), internals.begin() + quota);
                }
                push_round({});  // C_{u,1} = X_u
                for (size_t i = 1; i < sweep.size(); ++i) push_round({sweep[i - 1], sweep[i]});
                if (!sweep.empty()) push_round({sweep.back()});
                seq[u].insert(seq[u].end(), seq[v].begin() + 1, seq[v].end());
                push_round({});
                seq[u].insert(seq[u].end(), seq[w].begin() + 1, seq[w].end());
                break;
            }
        }
        // claims (b) and (c): budget and round-count bounds, node by node
        long long bound = info.subtree_nodes[u] * (1 + extra_of(u));
        if ((long long)seq[u].size() > bound)
            throw std::logic_error("treesub_strategy: round bound violated at node " + std::to_string(u));
        for (const auto& round : seq[u])
            if (int(round.size()) > width + 3)
                throw std::logic_error("treesub_strategy: budget exceeded at node " + std::to_string(u));
        for (int c : nodes[u].children) {
            seq[c].clear();
            seq[c].shrink_to_fit();
        }
    }

    out.strategy.kind = GameKind::Bcw;
    out.strategy.radius = 1;
    out.strategy.rounds = std::move(seq[ntd.td.root]);
    out.strategy.budget = std::max(1, out.strategy.max_round_size());
    auto res = verify(out.subdivision, out.strategy);
    if (res.status != VerifyStatus::Win)
        throw std::logic_error("treesub_strategy: constructed strategy fails verification: " + res.reason);
    return out;
}

// ---------------------------------------------------------------------------
// Subdivided complete binary trees cleanable by 3 cops
// ---------------------------------------------------------------------------

struct BintreeResult {
    Graph subdivision;   // T_h
    SubdivisionMap map;  // relative to cbt(h)
    Graph original;      // cbt(h)
    CopStrategy strategy;
};

/// T_h: a subdivision of the complete binary tree of height h on which 3
/// blind cops win at radius 1 (T_0 = K_1). Left edges keep length 1; the
/// right edge below a node whose subtree has height j+1 gets length m_j + 2,
/// where m_j is the round count of the height-j schedule (m_0 = 1,
/// m_{j+1} = 4 m_j + 2). The schedule per node: hold the node and sweep the
/// right connector, clean the left subtree recursively, re-sweep the
/// connector onto the right root, clean the right subtree recursively.
inline BintreeResult bintree_subdivision(int h, long long size_cap = kDefaultTreesubCap) {
    if (h < 0) throw std::invalid_argument("bintree_subdivision: height must be >= 0");
    BintreeResult out;
    out.original = complete_binary_tree(h);
    std::vector<long long> m(std::max(1, h) + 1);
    m[0] = 1;
    for (int j = 1; j <= h; ++j) m[j] = 4 * m[j - 1] + 2;

    std::vector<long long> lengths(out.original.m(), 1);
    // depth of heap node i
    auto depth = [&](int v) {
        int d = 0;
        while (v) {
            v = (v - 1) / 2;
            ++d;
        }
        return d;
    };
    for (int e = 0; e < out.original.m(); ++e) {
        auto [par, child] = out.original.edges()[e];
        if (child == 2 * par + 2) {  // right edges only
            int child_height = h - depth(child);
            lengths[e] = m[child_height] + 2;
        }
    }
    auto [hh, map] = subdivide(out.original, lengths, size_cap);
    out.subdivision = std::move(hh);
    out.map = std::move(map);

    out.strategy.kind = GameKind::Bcw;
    out.strategy.radius = 1;
    auto emit = [&](std::vector<int> round) {
        std::sort(round.begin(), round.end());
        out.strategy.rounds.push_back(std::move(round));
    };
    auto schedule = [&](auto&& self, int u, int height) -> void {
        if (height == 0) {
            emit({u});
            return;
        }
        int left = 2 * u + 1, right = 2 * u + 2;
        auto connector = out.map.paths[out.original.edge_index(u, right)];
        if (connector.front() != u) std::reverse(connector.begin(), connector.end());
        // connector = u, q_1, ..., q_{L-1}, right with L = m[height-1] + 2 >= 3
        size_t L = connector.size() - 1;
        for (size_t j = 1; j + 1 < L; ++j) emit({u, connector[j], connector[j + 1]});
        emit({u, left});                       // clean the left root before letting go of u
        self(self, left, height - 1);          // recurse left
        for (size_t j = 1; j < L; ++j) emit({u, connector[j], connector[j + 1]});  // up to the right root
        self(self, right, height - 1);         // recurse right
    };
    schedule(schedule, 0, h);
    out.strategy.budget = std::max(1, out.strategy.max_round_size());
    if ((long long)out.strategy.rounds.size() != m[h])
        throw std::logic_error("bintree_subdivision: schedule length drifted from the recurrence");
    if (out.strategy.budget > 3) throw std::logic_error("bintree_subdivision: budget exceeds 3");
    auto res = verify(out.subdivision, out.strategy);
    if (res.status != VerifyStatus::Win)
        throw std::logic_error("bintree_subdivision: schedule fails verification: " + res.reason);
    return out;
}

// ---------------------------------------------------------------------------
// The subdivided-K_{2t} example: bcw_1 between t+2 and t+3
// ---------------------------------------------------------------------------

struct K2tResult {
    Graph graph;
    CopStrategy strategy;       // t+3 cops, radius 1
    Graph pattern;              // K_{2t}
    MinorModel balanced_model;  // balanced K_{2t} model in `graph`
    // phase boundaries (round indices, 1-based inclusive) for schedule-shape checks
    std::vector<std::pair<std::string, std::pair<int, int>>> phases;
    std::vector<long long> segment_quotas;  // phase-3 cleaning quotas 2^{T-i}
};

/// K_{2t} with the edges inside the upper half subdivided 2^{t(t-1)} times
/// and a pendant path of n_core+1 vertices on each lower-half vertex. Emits
/// the explicit five-phase (t+3)-cop schedule and a balanced K_{2t} model
/// witnessing bcw_1 >= t+2.
inline K2tResult k2t_example(int t, long long size_cap = kDefaultTreesubCap) {
    if (t < 2) throw std::invalid_argument("k2t_example: t must be >= 2");
    long long T = (long long)t * (t - 1);
    if (T > 40) throw std::invalid_argument("k2t_example: t too large");
    long long seg = 1ll << T;  // internal vertices per subdivided edge
    long long core = 2ll * t + (T / 2) * seg;
    long long pendant = core + 1;
    long long total = core + t * pendant;
    if (total > size_cap) throw ResourceLimitError("k2t_example: size cap exceeded");

    K2tResult out;
    out.pattern = complete_graph(2 * t);
    std::vector<std::pair<int, int>> edges;
    int next = 2 * t;
    // subdivided upper-half edges, path vertex lists по edge
    std::vector<std::vector<int>> paths;  // indexed like `uppers`
    std::vector<std::pair<int, int>> uppers;
    for (int u = 0; u < 2 * t; ++u)
        for (int v = u + 1; v < 2 * t; ++v) {
            if (u >= t) {  // both in the upper half: subdivide
                std::vector<int> path{u};
                for (long long j = 0; j < seg; ++j) path.push_back(next++);
                path.push_back(v);
                for (size_t j = 0; j + 1 < path.size(); ++j)
                    edges.push_back({std::min(path[j], path[j + 1]), std::max(path[j], path[j + 1])});
                uppers.push_back({u, v});
                paths.push_back(std::move(path));
            } else {
                edges.push_back({u, v});
            }
        }
    // pendant paths on the lower half
    std::vector<std::vector<int>> pendants(t);
    for (int u = 0; u < t; ++u) {
        int prev = u;
        for (long long j = 0; j < pendant; ++j) {
            edges.push_back({std::min(prev, next), std::max(prev, next)});
            pendants[u].push_back(next);
            prev = next++;
        }
    }
    out.graph = Graph(int(total), std::move(edges));

    // --- schedule ---
    std::vector<int> camp_low(t);
    for (int u = 0; u < t; ++u) camp_low[u] = u;
    std::vector<int> camp_high(t);
    for (int u = 0; u < t; ++u) camp_high[u] = t + u;
    auto emit = [&](std::vector<int> base, std::initializer_list<int> extra) {
        for (int v : extra) base.push_back(v);
        std::sort(base.begin(), base.end());
        out.strategy.rounds.push_back(std::move(base));
    };
    auto mark_phase = [&](const std::string& name, int first) {
        out.phases.push_back({name, {first, int(out.strategy.rounds.size())}});
    };
    int first = 1;
    // phases 1+2: camp on [t], sweep each pendant path outward
    for (int u = 0; u < t; ++u)
        for (size_t j = 0; j + 1 < pendants[u].size(); ++j)
            emit(camp_low, {pendants[u][j], pendants[u][j + 1]});
    mark_phase("pendants", first);
    first = int(out.strategy.rounds.size()) + 1;
    // phase 3: ordered pairs (x,y) of distinct upper vertices, x ascending;
    // clean the 2^{T-i} internal vertices of path(x,y) nearest x
    {
        int i = 0;
        for (int x = t; x < 2 * t; ++x)
            for (int y = t; y < 2 * t; ++y) {
                if (x == y) continue;
                ++i;
                long long quota = 1ll << (T - i);
                out.segment_quotas.push_back(quota);
                int idx = -1;
                for (size_t p = 0; p < uppers.size(); ++p)
                    if (uppers[p] == std::make_pair(std::min(x, y), std::max(x, y))) idx = int(p);
                std::vector<int> internals(paths[idx].begin() + 1, paths[idx].end() - 1);
                if (paths[idx].front() != x) std::reverse(internals.begin(), internals.end());
                if (quota == 1) {
                    emit(camp_low, {x, internals[0]});
                } else {
                    for (long long j = 0; j + 1 < quota; ++j)
                        emit(camp_low, {x, internals[j], internals[j + 1]});
                }
            }
    }
    mark_phase("upper-balls", first);
    first = int(out.strategy.rounds.size()) + 1;
    // phase 4: the camp moves from [t] to the upper half in one round
    emit(camp_high, {});
    mark_phase("camp-move", first);
    first = int(out.strategy.rounds.size()) + 1;
    // phase 5: sweep every subdivided path end to end
    for (size_t p = 0; p < uppers.size(); ++p) {
        std::vector<int> internals(paths[p].begin() + 1, paths[p].end() - 1);
        for (size_t j = 0; j + 1 < internals.size(); ++j)
            emit(camp_high, {internals[j], internals[j + 1]});
    }
    mark_phase("final-sweep", first);
    out.strategy.kind = GameKind::Bcw;
    out.strategy.radius = 1;
    out.strategy.budget = t + 3;
    if (out.strategy.max_round_size() > t + 3) throw std::logic_error("k2t_example: budget exceeds t+3");
    auto res = verify(out.graph, out.strategy);
    if (res.status != VerifyStatus::Win)
        throw std::logic_error("k2t_example: schedule fails verification: " + res.reason);

    // --- balanced model: each upper vertex takes the seg/2 internals nearest
    // it on each incident path; each lower vertex takes a pendant prefix ---
    long long branch = 1 + (t - 1) * (seg / 2);
    out.balanced_model.branch_sets.assign(2 * t, {});
    for (int u = 0; u < t; ++u) {
        auto& bs = out.balanced_model.branch_sets[u];
        bs.push_back(u);
        for (long long j = 0; j < branch - 1; ++j) bs.push_back(pendants[u][j]);
        std::sort(bs.begin(), bs.end());
    }
    for (int u = t; u < 2 * t; ++u) out.balanced_model.branch_sets[u].push_back(u);
    for (size_t p = 0; p < uppers.size(); ++p) {
        auto [x, y] = uppers[p];
        const auto& path = paths[p];
        for (long long j = 0; j < seg / 2; ++j) {
            out.balanced_model.branch_sets[x].push_back(path[1 + j]);
            out.balanced_model.branch_sets[y].push_back(path[path.size() - 2 - j]);
        }
    }
    for (auto& bs : out.balanced_model.branch_sets) std::sort(bs.begin(), bs.end());
    ModelCheck mc = verify_model(out.pattern, out.graph, out.balanced_model);
    if (!mc.ok) throw std::logic_error("k2t_example: balanced model invalid: " + mc.violation);
    if (!is_balanced(out.balanced_model)) throw std::logic_error("k2t_example: model not balanced");
    return out;
}

}  // namespace copwidth
