#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "copwidth/errors.hpp"
#include "copwidth/vertex_set.hpp"

namespace copwidth {

/// Finite simple undirected graph with dense vertex ids [0, n).
/// Immutable after construction; edges stored sorted with u < v.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        for (auto& [u, v] : edge_list) {
            if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n)
                throw std::invalid_argument("graph: edge endpoint out of range: " + std::to_string(u) + "," +
                                            std::to_string(v));
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
            throw std::invalid_argument("graph: duplicate edge");
        edges_ = std::move(edge_list);
        adj_.assign(n, {});
        adj_mask_.assign(n, VertexSet(n));
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            adj_mask_[u].set(v);
            adj_mask_[v].set(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const VertexSet& neighbor_mask(int v) const { return adj_mask_[v]; }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        return adj_mask_[u].test(v);
    }
    /// Index into edges() of {u,v}, or -1.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (it != edges_.end() && *it == std::make_pair(u, v)) return int(it - edges_.begin());
        return -1;
    }

    int degree(int v) const { return int(adj_[v].size()); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    /// All-pairs BFS diameter; nullopt when disconnected (or n == 0).
    std::optional<int> diameter() const {
        if (n_ == 0) return std::nullopt;
        int diam = 0;
        std::vector<int> dist(n_);
        for (int s = 0; s < n_; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj_[u])
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        diam = std::max(diam, dist[w]);
                        q.push(w);
                    }
            }
            for (int v = 0; v < n_; ++v)
                if (dist[v] < 0) return std::nullopt;
        }
        return diam;
    }

    bool connected() const { return n_ <= 1 || diameter().has_value(); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_mask_;
};

/// N_G(A) = union of neighborhoods minus A itself.
inline VertexSet neighborhood(const Graph& g, const VertexSet& a) {
    if (a.universe() != g.n()) throw std::invalid_argument("neighborhood: set universe mismatch");
    VertexSet out(g.n());
    a.for_each([&](int v) { out |= g.neighbor_mask(v); });
    out -= a;
    return out;
}

/// A ∪ N_G(A).
inline VertexSet spread(const Graph& g, const VertexSet& a) {
    VertexSet out = a;
    a.for_each([&](int v) { out |= g.neighbor_mask(v); });
    return out;
}

/// Vertices within distance r of A in G minus `blocked` (paths must avoid
/// blocked vertices entirely; vertices of A inside `blocked` are dropped).
/// r < 0 means unbounded (connectivity).
inline VertexSet ball(const Graph& g, const VertexSet& a, int r, const VertexSet& blocked) {
    VertexSet reach = a - blocked;
    VertexSet frontier = reach;
    for (int step = 0; (r < 0 || step < r) && frontier.any(); ++step) {
        VertexSet next(g.n());
        frontier.for_each([&](int v) { next |= g.neighbor_mask(v); });
        next -= blocked;
        next -= reach;
        if (next.empty()) break;
        reach |= next;
        frontier = next;
    }
    return reach;
}

inline VertexSet ball(const Graph& g, const VertexSet& a, int r) { return ball(g, a, r, VertexSet(g.n())); }

// ---------------------------------------------------------------------------
// Generators. All are pure functions of their parameters (and seed).
// ---------------------------------------------------------------------------

inline Graph complete_graph(int n) {
    if (n <= 0) throw std::invalid_argument("complete: n must be positive");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

inline Graph complete_bipartite_graph(int s, int t) {
    if (s <= 0 || t <= 0) throw std::invalid_argument("complete_bipartite: sizes must be positive");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) e.push_back({u, s + v});
    return Graph(s + t, std::move(e));
}

inline Graph path_graph(int n) {
    if (n <= 0) throw std::invalid_argument("path: n must be positive");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph(n, std::move(e));
}

/// rows x cols grid, vertex (i,j) -> i*cols + j.
inline Graph grid_graph(int rows, int cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("grid: sizes must be positive");
    std::vector<std::pair<int, int>> e;
    auto id = [&](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) e.push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < rows) e.push_back({id(i, j), id(i + 1, j)});
        }
    return Graph(rows * cols, std::move(e));
}

/// Upper half of the n x n grid: induced on {(i,j) : i <= j}.
inline Graph half_grid_graph(int n) {
    if (n <= 0) throw std::invalid_argument("half_grid: n must be positive");
    std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
    int cnt = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) id[i][j] = cnt++;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (j + 1 < n) e.push_back({id[i][j], id[i][j + 1]});
            if (i + 1 < n && i + 1 <= j) e.push_back({id[i][j], id[i + 1][j]});
        }
    return Graph(cnt, std::move(e));
}

/// Complete binary tree of height h (2^{h+1}-1 vertices, heap ids:
/// root 0, children of i are 2i+1 and 2i+2).
inline Graph complete_binary_tree(int h) {
    if (h < 0) throw std::invalid_argument("cbt: height must be nonnegative");
    if (h > 25) throw std::invalid_argument("cbt: height too large");
    int n = (1 << (h + 1)) - 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; 2 * i + 2 < n; ++i) {
        e.push_back({i, 2 * i + 1});
        e.push_back({i, 2 * i + 2});
    }
    return Graph(n, std::move(e));
}

/// k-th power of the n-vertex path: edges between vertices at distance <= k.
inline Graph path_power_graph(int n, int k) {
    if (n <= 0 || k <= 0) throw std::invalid_argument("path_power: parameters must be positive");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n && j <= i + k; ++j) e.push_back({i, j});
    return Graph(n, std::move(e));
}

/// Random maximal outerplanar graph: cycle 0..n-1 plus a random (seeded)
/// triangulation of the polygon interior. The outer cycle is the identity
/// order on vertex ids, which is what embed_outerplanar expects.
inline Graph random_maximal_outerplanar(int n, uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("random_maximal_outerplanar: n must be positive");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    // Triangulate the polygon spanned by lo..hi (edge lo-hi already present).
    auto tri = [&](auto&& self, int lo, int hi) -> void {
        if (hi - lo < 2) return;
        std::uniform_int_distribution<int> pick(lo + 1, hi - 1);
        int k = pick(rng);
        if (k - lo > 1) e.push_back({lo, k});
        if (hi - k > 1) e.push_back({k, hi});
        self(self, lo, k);
        self(self, k, hi);
    };
    tri(tri, 0, n - 1);
    return Graph(n, std::move(e));
}

/// G(n, p) with p given in percent [0, 100].
inline Graph random_graph(int n, int p_percent, uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("random_graph: n must be positive");
    if (p_percent < 0 || p_percent > 100) throw std::invalid_argument("random_graph: p must be in [0,100]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 99);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p_percent) e.push_back({u, v});
    return Graph(n, std::move(e));
}

/// CLI-facing dispatcher over the generator family names.
inline Graph generate(const std::string& family, const std::vector<long long>& params, uint64_t seed) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("generate: family '" + family + "' takes " + std::to_string(k) +
                                        " parameter(s)");
    };
    auto p = [&](size_t i) { return int(params[i]); };
    if (family == "complete") { need(1); return complete_graph(p(0)); }
    if (family == "complete_bipartite") { need(2); return complete_bipartite_graph(p(0), p(1)); }
    if (family == "path") { need(1); return path_graph(p(0)); }
    if (family == "cycle") { need(1); return cycle_graph(p(0)); }
    if (family == "grid") { need(2); return grid_graph(p(0), p(1)); }
    if (family == "half_grid") { need(1); return half_grid_graph(p(0)); }
    if (family == "cbt") { need(1); return complete_binary_tree(p(0)); }
    if (family == "path_power") { need(2); return path_power_graph(p(0), p(1)); }
    if (family == "random_maximal_outerplanar") { need(1); return random_maximal_outerplanar(p(0), seed); }
    if (family == "random_graph") { need(2); return random_graph(p(0), p(1), seed); }
    throw std::invalid_argument("generate: unknown family '" + family + "'");
}

// ---------------------------------------------------------------------------
// Subdivision
// ---------------------------------------------------------------------------

/// Records, per original edge, the replacing path: paths[e] lists the vertex
/// ids of the path in the subdivided graph from edges()[e].first to .second
/// (endpoints included). Internal vertices are the freshly inserted ids.
struct SubdivisionMap {
    std::vector<std::vector<int>> paths;
};

inline constexpr long long kDefaultSubdivisionCap = 2'000'000;

/// Replace edge e by a path of lengths[e] edges (lengths[e] >= 1). Original
/// vertices keep their ids; inserted ids are appended after n in edge-sorted
/// order. Throws ResourceLimitError when the result exceeds max_vertices.
inline std::pair<Graph, SubdivisionMap> subdivide(const Graph& g, const std::vector<long long>& lengths,
                                                  long long max_vertices = kDefaultSubdivisionCap) {
    if (lengths.size() != size_t(g.m())) throw std::invalid_argument("subdivide: one length per edge required");
    long long total = g.n();
    for (long long l : lengths) {
        if (l <= 0) throw std::invalid_argument("subdivide: lengths must be >= 1");
        total += l - 1;
        if (total > max_vertices)
            throw ResourceLimitError("subdivide: result would have more than " + std::to_string(max_vertices) +
                                     " vertices");
    }
    int nn = int(total);
    std::vector<std::pair<int, int>> e;
    SubdivisionMap map;
    map.paths.resize(g.m());
    int next = g.n();
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.edges()[i];
        std::vector<int>& path = map.paths[i];
        path.push_back(u);
        for (long long j = 1; j < lengths[i]; ++j) path.push_back(next++);
        path.push_back(v);
        for (size_t j = 0; j + 1 < path.size(); ++j)
            e.push_back({std::min(path[j], path[j + 1]), std::max(path[j], path[j + 1])});
    }
    return {Graph(nn, std::move(e)), std::move(map)};
}

/// Internal vertices of the path replacing edge e, ordered outward from
/// endpoint `from`.
inline std::vector<int> path_internals_from(const SubdivisionMap& map, int edge_idx, int from) {
    const auto& p = map.paths[edge_idx];
    std::vector<int> internals(p.begin() + 1, p.end() - 1);
    if (p.front() != from) {
        if (p.back() != from) throw std::invalid_argument("path_internals_from: vertex is not an endpoint");
        std::reverse(internals.begin(), internals.end());
    }
    return internals;
}

// ---------------------------------------------------------------------------
// Text format: optional '#' comment lines; 'n m' then m lines 'u v', u < v.
// ---------------------------------------------------------------------------

inline Graph read_graph(std::istream& in) {
    std::string line;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_data_line()) throw ParseError("graph: missing header line");
    std::istringstream hdr(line);
    long long n, m;
    if (!(hdr >> n >> m) || n < 0 || m < 0) throw ParseError("graph: bad header '" + line + "'");
    std::vector<std::pair<int, int>> e;
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line()) throw ParseError("graph: expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw ParseError("graph: bad edge line '" + line + "'");
        if (!(0 <= u && u < v && v < n)) throw ParseError("graph: edge out of range '" + line + "'");
        e.push_back({int(u), int(v)});
    }
    try {
        return Graph(int(n), std::move(e));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("graph: ") + ex.what());
    }
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
}

inline void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write graph file: " + path);
    write_graph(out, g);
}

inline std::string to_dot(const Graph& g, const std::vector<int>* coloring = nullptr) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << v;
        if (coloring && (*coloring)[v] >= 0)
            out << " [style=filled, colorscheme=set312, fillcolor=" << (*coloring)[v] % 12 + 1 << "]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace copwidth
