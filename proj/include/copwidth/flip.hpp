#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "copwidth/graph.hpp"

namespace copwidth {

/// One announced flip: a partition of V into at most p parts (dense ids) and
/// a set of unordered part pairs to flip; loops (P,P) flip all pairs inside P.
struct FlipRound {
    std::vector<int> part_of;                 // size n
    std::vector<std::pair<int, int>> flips;   // part-id pairs, a <= b

    int width() const {
        int p = -1;
        for (int x : part_of) p = std::max(p, x);
        return p + 1;
    }
};

struct FlipStrategy {
    int radius = 1;
    std::vector<FlipRound> rounds;

    int width() const {
        int w = 0;
        for (const auto& r : rounds) w = std::max(w, r.width());
        return w;
    }
};

inline void validate_flip_round(const Graph& g, const FlipRound& r) {
    if (int(r.part_of.size()) != g.n()) throw std::invalid_argument("flip round: every vertex must be assigned");
    int p = r.width();
    for (int x : r.part_of)
        if (x < 0) throw std::invalid_argument("flip round: negative part id");
    std::vector<char> used(p, 0);
    for (int x : r.part_of) used[x] = 1;
    for (char u : used)
        if (!u) throw std::invalid_argument("flip round: part ids must be dense");
    for (auto [a, b] : r.flips)
        if (a < 0 || b < 0 || a >= p || b >= p || a > b)
            throw std::invalid_argument("flip round: bad flip pair");
}

/// XOR the adjacency with the flipped part-pair relation; no self-loops are
/// ever created since only distinct vertex pairs are considered.
inline Graph apply_flip(const Graph& g, const FlipRound& r) {
    validate_flip_round(g, r);
    int p = r.width();
    std::vector<std::vector<char>> flip(p, std::vector<char>(p, 0));
    for (auto [a, b] : r.flips) flip[a][b] = flip[b][a] = 1;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool edge = g.has_edge(u, v);
            if (flip[r.part_of[u]][r.part_of[v]]) edge = !edge;
            if (edge) e.push_back({u, v});
        }
    return Graph(g.n(), std::move(e));
}

struct FlipTrace {
    std::vector<VertexSet> alive;  // A_0..A_m (possible robber positions)
    bool win = false;
};

/// Blind flip game: A_0 = V; at round i the robber moves at speed <= radius
/// in G_{i-1}, then the announced flip is applied to the ORIGINAL graph to
/// obtain G_i. With strict capture (default) a robber on an isolated vertex
/// of G_i is removed immediately and the flipper wins when A_i = ∅; the
/// lenient reading keeps him and wins only when every possible position is
/// isolated simultaneously.
inline FlipTrace flip_simulate(const Graph& g, const FlipStrategy& s, bool strict_capture = true) {
    FlipTrace t;
    VertexSet a = VertexSet::full(g.n());
    t.alive.push_back(a);
    Graph cur = g;  // G_{i-1}
    for (const auto& round : s.rounds) {
        VertexSet moved = ball(cur, a, s.radius);
        Graph next = apply_flip(g, round);
        VertexSet isolated(g.n());
        for (int v = 0; v < g.n(); ++v)
            if (next.degree(v) == 0) isolated.set(v);
        if (strict_capture) {
            a = moved - isolated;
            t.alive.push_back(a);
            if (a.empty()) {
                t.win = true;
                break;
            }
        } else {
            a = moved;
            t.alive.push_back(a);
            if (a.any() && isolated.contains(a)) {
                t.win = true;
                break;
            }
        }
        cur = std::move(next);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Text format, one block per round:
//   parts=<p>
//   part <id>: v1 v2 ...
//   flips: (a,b) (c,c) ...
// ---------------------------------------------------------------------------

inline FlipStrategy read_flip_strategy(std::istream& in, int n) {
    FlipStrategy s;
    std::string line;
    bool got_radius = false;
    FlipRound cur;
    int declared_parts = -1;
    auto flush = [&]() {
        if (declared_parts < 0) return;
        if (cur.width() != declared_parts) throw ParseError("flip: declared part count mismatch");
        s.rounds.push_back(cur);
        cur = FlipRound{};
        declared_parts = -1;
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (tok.rfind("radius=", 0) == 0) {
            s.radius = std::stoi(tok.substr(7));
            got_radius = true;
        } else if (tok.rfind("parts=", 0) == 0) {
            flush();
            declared_parts = std::stoi(tok.substr(6));
            cur.part_of.assign(n, -1);
        } else if (tok == "part") {
            std::string id_tok;
            if (!(ls >> id_tok) || id_tok.back() != ':') throw ParseError("flip: bad part line '" + line + "'");
            int id = std::stoi(id_tok.substr(0, id_tok.size() - 1));
            long long v;
            while (ls >> v) {
                if (v < 0 || v >= n) throw ParseError("flip: vertex out of range");
                cur.part_of[v] = id;
            }
        } else if (tok == "flips:") {
            std::string pair_tok;
            while (ls >> pair_tok) {
                int a, b;
                if (sscanf(pair_tok.c_str(), "(%d,%d)", &a, &b) != 2)
                    throw ParseError("flip: bad flip pair '" + pair_tok + "'");
                cur.flips.push_back({std::min(a, b), std::max(a, b)});
            }
        } else {
            throw ParseError("flip: unexpected line '" + line + "'");
        }
    }
    flush();
    if (!got_radius) s.radius = 1;
    for (const auto& r : s.rounds)
        for (int x : r.part_of)
            if (x < 0) throw ParseError("flip: some vertex is unassigned");
    return s;
}

inline void write_flip_strategy(std::ostream& out, const FlipStrategy& s) {
    out << "radius=" << s.radius << "\n";
    for (const auto& r : s.rounds) {
        int p = r.width();
        out << "parts=" << p << "\n";
        for (int id = 0; id < p; ++id) {
            out << "part " << id << ":";
            for (int v = 0; v < int(r.part_of.size()); ++v)
                if (r.part_of[v] == id) out << " " << v;
            out << "\n";
        }
        out << "flips:";
        for (auto [a, b] : r.flips) out << " (" << a << "," << b << ")";
        out << "\n";
    }
}

inline FlipStrategy load_flip_strategy(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open flip strategy file: " + path);
    return read_flip_strategy(in, n);
}

inline void save_flip_strategy(const std::string& path, const FlipStrategy& s) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write flip strategy file: " + path);
    write_flip_strategy(out, s);
}

}  // namespace copwidth
