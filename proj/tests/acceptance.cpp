// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all exact) and prints one pass/fail line per criterion. Exit code = number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "copwidth/copwidth.hpp"

using namespace copwidth;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    long long checks = 0;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void expect(bool ok, const std::string& why) {
        ++checks;
        if (!ok) fail(why);
    }
};

Graph random_connected(int n, std::mt19937_64& rng, int extra_percent = 35) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.push_back({int(rng() % v), v});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (int(rng() % 100) < extra_percent &&
                std::find(e.begin(), e.end(), std::make_pair(u, v)) == e.end())
                e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph random_subcubic_tree(int n, std::mt19937_64& rng) {
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) {
        int u;
        do {
            u = int(rng() % v);
        } while (deg[u] >= 3);
        e.push_back({u, v});
        ++deg[u];
        ++deg[v];
    }
    return Graph(n, std::move(e));
}

// all connected labeled graphs on n vertices (n <= 5 keeps this tiny)
std::vector<Graph> all_connected(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> e;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) e.push_back(pairs[i]);
        Graph g(n, std::move(e));
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

// --- criterion 1: exact values on complete graphs -------------------------
Outcome criterion1() {
    Outcome o;
    for (int n = 1; n <= 5; ++n)
        o.expect(compute(complete_graph(n), GameKind::Bcw, 1).value == n,
                 "bcw_1(K_" + std::to_string(n) + ") != " + std::to_string(n));
    o.expect(compute(complete_graph(2), GameKind::ZeroVis).value == 1, "c0(K_2) != 1");
    o.expect(compute(complete_graph(2), GameKind::Bcw, 1).value == 2, "bcw_1(K_2) != 2");
    return o;
}

// --- criterion 2: IN = bcw_1 on >= 500 connected graphs with n <= 6 -------
Outcome criterion2() {
    Outcome o;
    std::mt19937_64 rng(2024);
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<Graph> graphs;
    for (int n = 2; n <= 4; ++n)
        for (Graph& g : all_connected(n))
            if (seen.insert(g.edges()).second) graphs.push_back(std::move(g));
    while (graphs.size() < 520) {
        Graph g = random_connected(5 + int(rng() % 2), rng, 20 + int(rng() % 50));
        if (seen.insert(g.edges()).second) graphs.push_back(std::move(g));
    }
    for (const Graph& g : graphs) {
        int in = compute(g, GameKind::Search).value;
        int b1 = compute(g, GameKind::Bcw, 1).value;
        o.expect(in == b1, "IN != bcw_1 on a graph with n=" + std::to_string(g.n()));
        if (!o.pass) break;
    }
    o.detail = std::to_string(graphs.size()) + " graphs";
    return o;
}

// --- criterion 3: bcw_inf = pw + 1; pathwidth of small cbt ----------------
Outcome criterion3() {
    Outcome o;
    std::mt19937_64 rng(3030);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + int(rng() % 5);  // up to 8
        Graph g = trial % 4 == 0 ? random_graph(n, 20 + int(rng() % 60), rng()) : random_connected(n, rng);
        int lhs = compute(g, GameKind::Bcw, kRadiusInf).value;
        int rhs = pathwidth_oracle(g) + 1;
        o.expect(lhs == rhs, "bcw_inf != pw+1 (n=" + std::to_string(n) + ", got " + std::to_string(lhs) +
                                 " vs " + std::to_string(rhs) + ")");
        if (!o.pass) break;
    }
    for (int h = 0; h <= 4; ++h)
        o.expect(pathwidth_oracle(complete_binary_tree(h)) == (h + 1) / 2,
                 "pw(cbt(" + std::to_string(h) + ")) != ceil(h/2)");
    return o;
}

// --- criterion 4: radius sandwich and double_speed ------------------------
Outcome criterion4() {
    Outcome o;
    std::mt19937_64 rng(4040);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + int(rng() % 4);  // up to 7
        Graph g = random_connected(n, rng);
        auto r1 = compute(g, GameKind::Bcw, 1);
        int b2 = compute(g, GameKind::Bcw, 2).value;
        o.expect(r1.value <= b2 && b2 <= 2 * r1.value, "bcw_1 <= bcw_2 <= 2 bcw_1 violated");
        CopStrategy fast = double_speed(g, r1.witness);  // throws if not winning
        o.expect(verify(g, fast).status == VerifyStatus::Win, "double_speed output not winning");
        o.expect(fast.budget == 2 * r1.value, "double_speed budget != 2k");
        if (!o.pass) break;
    }
    return o;
}

// --- criterion 5: treesub on the five named graphs ------------------------
Outcome criterion5() {
    Outcome o;
    struct Case {
        std::string name;
        Graph g;
        int width;
        int budget;
    };
    std::vector<Case> cases;
    cases.push_back({"P5", path_graph(5), 1, 4});
    cases.push_back({"C6", cycle_graph(6), 2, 5});
    cases.push_back({"cbt(3)", complete_binary_tree(3), 1, 4});
    cases.push_back({"grid(3,3)", grid_graph(3, 3), 3, 6});
    cases.push_back({"K4", complete_graph(4), 3, 6});
    for (auto& c : cases) {
        auto tw = treewidth_oracle(c.g);
        o.expect(tw.width == c.width, c.name + ": oracle width != " + std::to_string(c.width));
        auto ntd = make_nice(c.g, tw.decomposition);
        auto res = treesub_strategy(c.g, ntd, 10'000'000);
        o.expect(verify(res.subdivision, res.strategy).status == VerifyStatus::Win, c.name + ": not winning");
        o.expect(res.strategy.max_round_size() <= c.budget,
                 c.name + ": budget " + std::to_string(res.strategy.max_round_size()) + " > " +
                     std::to_string(c.budget));
        long long extra = res.subdivision.n() - c.g.n();
        long long bound = (long long)ntd.td.nodes.size() * (1 + extra);
        o.expect((long long)res.strategy.rounds.size() <= bound, c.name + ": round count above claim (c)");
    }
    return o;
}

// --- criterion 6: subdivided binary trees vs cbt pathwidth -----------------
Outcome criterion6() {
    Outcome o;
    for (int h = 0; h <= 5; ++h) {
        auto res = bintree_subdivision(h);
        o.expect(res.strategy.max_round_size() <= 3, "T_" + std::to_string(h) + " needs more than 3 cops");
        o.expect(verify(res.subdivision, res.strategy).status == VerifyStatus::Win,
                 "T_" + std::to_string(h) + " schedule not winning");
        o.expect(pathwidth_oracle(complete_binary_tree(h)) == (h + 1) / 2,
                 "pw(cbt(" + std::to_string(h) + ")) != ceil(h/2)");
    }
    return o;
}

// --- criterion 7: the subdivided K_{2t} example at t = 2 -------------------
Outcome criterion7() {
    Outcome o;
    auto res = k2t_example(2);
    o.expect(res.strategy.max_round_size() <= 5, "k2t(2) needs more than t+3 = 5 cops");
    o.expect(verify(res.graph, res.strategy).status == VerifyStatus::Win, "k2t(2) schedule not winning");
    o.expect(is_balanced(res.balanced_model), "k2t(2) model not balanced");
    o.expect(lb_balanced_clique(res.pattern, res.graph, res.balanced_model) == 4,
             "balanced-K4 certificate should give bcw_1 >= 4");
    return o;
}

// --- criterion 8: NAF machinery --------------------------------------------
Outcome criterion8() {
    Outcome o;
    std::map<long long, int> memo;
    std::function<int(long long)> brute = [&](long long k) -> int {
        k = std::llabs(k);
        if (k <= 1) return int(k);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        int w = k % 2 == 0 ? brute(k / 2) : 1 + std::min(brute((k - 1) / 2), brute((k + 1) / 2));
        memo[k] = w;
        return w;
    };
    for (long long k = -4096; k <= 4096 && o.pass; ++k)
        o.expect(naf_weight(k) == brute(k), "naf weight != brute minimum at k=" + std::to_string(k));
    o.expect(g_of_k(1).to_string() == "1365", "g(1) != 1365");
    o.expect(naf_weight(g_of_k(1)) == 6, "w(g(1)) != 6");
    auto r1 = naf_lemma_check(1, true);
    o.expect(r1.sufficient_ok && r1.oracle_ran && r1.oracle_ok, "naf_lemma_check(1) failed");
    auto r2 = naf_lemma_check(2, false);
    o.expect(r2.sufficient_ok, "naf_lemma_check(2) sufficient check failed");
    return o;
}

// --- criterion 9: certificate soundness ------------------------------------
Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(9090);
    std::vector<Graph> graphs;
    for (int n = 2; n <= 5; ++n)
        for (Graph& g : all_connected(n)) graphs.push_back(std::move(g));
    for (int trial = 0; trial < 150; ++trial) graphs.push_back(random_connected(6 + int(rng() % 2), rng));
    for (int trial = 0; trial < 200; ++trial) graphs.push_back(random_connected(8, rng, 15 + int(rng() % 60)));
    long long fired = 0;
    for (const Graph& g : graphs) {
        int exact = compute(g, GameKind::Bcw, 1).value;
        for (int a = 1; a <= g.n() && o.pass; ++a) {
            // strongest k this subset size certifies: min over |A|=a of |N(A)|
            int k_max = g.n();
            std::vector<int> idx(a);
            for (int i = 0; i < a; ++i) idx[i] = i;
            while (true) {
                k_max = std::min(k_max, neighborhood(g, VertexSet::from(g.n(), idx)).count());
                int i = 0;
                while (i < a && idx[i] + 1 == (i + 1 < a ? idx[i + 1] : g.n())) ++i;
                if (i == a) break;
                ++idx[i];
                for (int j = 0; j < i; ++j) idx[j] = j;
            }
            if (k_max < 1) continue;
            auto cert = expansion_certificate(g, a, k_max);
            o.expect(cert.certified, "expansion_certificate disagrees with direct enumeration");
            ++fired;
            o.expect(exact > k_max, "expansion certificate unsound: bcw_1 = " + std::to_string(exact) +
                                        " but certified > " + std::to_string(k_max));
        }
        if (!o.pass) break;
    }
    // balanced-clique certificates against the exact solver
    for (int h = 2; h <= 5; ++h) {
        Graph kh = complete_graph(h);
        int bound = lb_balanced_clique(kh, kh, MinorModel::identity(kh));
        o.expect(compute(kh, GameKind::Bcw, 1).value >= bound, "balanced-clique bound unsound on K_h");
    }
    {
        MinorModel m;
        m.branch_sets = {{0, 1}, {2, 3}, {4, 5}};
        int bound = lb_balanced_clique(complete_graph(3), cycle_graph(6), m);
        o.expect(compute(cycle_graph(6), GameKind::Bcw, 1).value >= bound, "balanced-clique bound unsound on C6");
    }
    o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(fired) + " certificates";
    return o;
}

// --- criterion 10: the transformer suite -----------------------------------
Outcome criterion10() {
    Outcome o;
    std::mt19937_64 rng(101010);
    for (int trial = 0; trial < 40 && o.pass; ++trial) {
        int n = 4 + int(rng() % 3);  // up to 6
        Graph g = random_connected(n, rng);
        int delta = g.max_degree();
        int d = std::max(1, *g.diameter());

        auto hunt = compute(g, GameKind::Hunt);
        CopStrategy hc = hunter_to_cop(g, hunt.witness);
        o.expect(verify(g, hc).status == VerifyStatus::Win, "hunter_to_cop not winning");
        o.expect(hc.max_round_size() <= (delta + 1) * hunt.value, "hunter_to_cop budget > (Δ+1)k");

        auto zv = compute(g, GameKind::ZeroVis);
        CopStrategy zc = zerovis_to_cop(g, zv.witness);
        o.expect(verify(g, zc).status == VerifyStatus::Win, "zerovis_to_cop not winning");
        o.expect(zc.max_round_size() <= 2 * zv.value, "zerovis_to_cop budget > 2k");

        auto bd = compute(g, GameKind::Bcw, d);
        CopStrategy cz = cop_to_zerovis(g, bd.witness);
        o.expect(verify(g, cz).status == VerifyStatus::Win, "cop_to_zerovis not winning");
        o.expect(cz.max_round_size() <= 2 * bd.value, "cop_to_zerovis budget > 2k");
        o.expect(cz.length() <= std::max(1, d * (bd.witness.length() - 2) + 1) + 1,
                 "cop_to_zerovis round count above d per source round");

        auto b1 = compute(g, GameKind::Bcw, 1);
        FlipStrategy fs = cop_to_flip(g, b1.witness);
        o.expect(flip_simulate(g, fs).win, "cop_to_flip not winning");
        o.expect(fs.width() <= b1.value + (1 << b1.value), "cop_to_flip parts > k + 2^k");
    }
    // flip round trip on subcubic trees up to n = 10
    for (int trial = 0; trial < 12 && o.pass; ++trial) {
        int n = 6 + int(rng() % 5);
        Graph t = random_subcubic_tree(n, rng);
        auto b3 = compute(t, GameKind::Bcw, 3);
        FlipStrategy fs = cop_to_flip(t, b3.witness);
        int k = fs.width();
        o.expect(k <= b3.value + (1 << b3.value), "round trip: parts > k + 2^k");
        CopStrategy back = flip_to_cop(t, fs);
        o.expect(verify(t, back).status == VerifyStatus::Win, "flip_to_cop not winning");
        int delta = t.max_degree();
        o.expect(back.max_round_size() <= 2 * k * (delta + 1) * (delta + 1), "flip_to_cop budget > 2k(Δ+1)^2");
    }
    return o;
}

// --- criterion 11: minor constructions -------------------------------------
Outcome criterion11() {
    Outcome o;
    std::mt19937_64 rng(111111);
    // balance_clique on subdivided-K5 hosts
    for (int trial = 0; trial < 10; ++trial) {
        Graph k5 = complete_graph(5);
        std::vector<long long> lens(10, 1);
        // subdivide a few edges; hand each middle to one endpoint
        std::vector<std::pair<int, int>> grown;
        for (int e = 0; e < 10; ++e)
            if (rng() % 3 == 0) lens[e] = 2;
        auto [host, map] = subdivide(k5, lens);
        MinorModel m;
        m.branch_sets.resize(5);
        for (int v = 0; v < 5; ++v) m.branch_sets[v] = {v};
        for (int e = 0; e < 10; ++e)
            if (lens[e] == 2) {
                int owner = rng() % 2 ? k5.edges()[e].first : k5.edges()[e].second;
                m.branch_sets[owner].push_back(map.paths[e][1]);
            }
        for (auto& bs : m.branch_sets) std::sort(bs.begin(), bs.end());
        if (!verify_model(k5, host, m).ok) {
            o.fail("test fixture model invalid");
            break;
        }
        auto out = balance_clique(k5, host, m);
        o.expect(verify_model(complete_graph(3), host, out).ok, "balance_clique output invalid");
        o.expect(is_balanced(out), "balance_clique output not balanced");
    }
    // embed_outerplanar on 50 random maximal outerplanar graphs, n <= 10
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + int(rng() % 8);
        Graph p = random_maximal_outerplanar(n, rng());
        auto emb = embed_outerplanar(p);
        o.expect(verify_model(p, emb.host, emb.model).ok, "embedding invalid");
        for (int k = 0; k < n && o.pass; ++k) {
            int diag = 0;
            for (int v : emb.model.branch_sets[k]) {
                int i = v / n, j = v % n;
                if (i > j) o.fail("(b) violated: branch set below the diagonal");
                if (i == j) ++diag, o.expect(i == k, "(a) violated: wrong diagonal cell");
            }
            o.expect(diag == 1, "(a) violated: diagonal cell not unique");
        }
        if (!o.pass) break;
    }
    // balanced triangle model in grid(9,12)
    {
        Graph tri = complete_graph(3);
        auto [host, model] = balanced_outerplanar_in_grid(tri);
        o.expect(host.n() == 9 * 12, "host is not grid(9,12)");
        o.expect(verify_model(tri, host, model).ok, "balanced triangle model invalid");
        o.expect(is_balanced(model), "triangle model not balanced");
    }
    return o;
}

// --- criterion 12: subtree counting ----------------------------------------
Outcome criterion12() {
    Outcome o;
    std::mt19937_64 rng(121212);
    for (int trial = 0; trial < 500; ++trial) {
        int h = 2 + int(rng() % 5);
        Graph t = complete_binary_tree(h);
        std::vector<int> members{int(rng() % t.n())};
        VertexSet in_tree(t.n());
        in_tree.set(members[0]);
        int grow = int(rng() % t.n());
        for (int step = 0; step < grow; ++step) {
            int v = members[rng() % members.size()];
            int w = t.neighbors(v)[rng() % t.neighbors(v).size()];
            if (!in_tree.test(w)) {
                in_tree.set(w);
                members.push_back(w);
            }
        }
        auto hv = [&](int v) {
            int d = 0;
            while (v) {
                v = (v - 1) / 2;
                ++d;
            }
            return h - d;
        };
        int top = members[0];
        for (int v : members)
            if (hv(v) > hv(top)) top = v;
        std::vector<int> depths;
        for (int v = 0; v < t.n(); ++v) {
            if (in_tree.test(v)) continue;
            bool adj = false;
            for (int w : t.neighbors(v)) adj = adj || in_tree.test(w);
            if (adj && hv(v) < hv(top)) depths.push_back(hv(v));
        }
        o.expect(subtree_count(hv(top), depths) == (long long)members.size(),
                 "formula != direct count (h=" + std::to_string(h) + ")");
        if (!o.pass) break;
    }
    return o;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Entry> entries = {
        {1, "exact values on complete graphs and K2", criterion1},
        {2, "IN = bcw_1 on connected graphs up to n=6", criterion2},
        {3, "bcw_inf = pathwidth + 1", criterion3},
        {4, "radius sandwich and double_speed", criterion4},
        {5, "treesub synthesis on the five named graphs", criterion5},
        {6, "3-cop subdivided binary trees vs cbt pathwidth", criterion6},
        {7, "subdivided K_{2t} example at t=2", criterion7},
        {8, "NAF weights, g(k) and the interval lemma", criterion8},
        {9, "lower-bound certificates are sound", criterion9},
        {10, "transformer suite within stated budgets", criterion10},
        {11, "minor constructions verify", criterion11},
        {12, "subtree counting formula", criterion12},
    };
    int failed = 0;
    for (auto& e : entries) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("criterion %2d: %s (%.1fs, %lld checks) %s%s%s\n", e.id, o.pass ? "PASS" : "FAIL", secs,
                    o.checks, e.name, o.detail.empty() ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    if (failed) std::printf("%d criterion(s) FAILED\n", failed);
    else std::printf("all criteria passed\n");
    return failed;
}
