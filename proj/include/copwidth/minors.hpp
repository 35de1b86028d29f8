#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "copwidth/errors.hpp"
#include "copwidth/graph.hpp"

namespace copwidth {

/// Minor model of a pattern graph in a host: one branch set of host vertices
/// per pattern vertex.
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;

    static MinorModel identity(const Graph& g) {
        MinorModel m;
        m.branch_sets.resize(g.n());
        for (int v = 0; v < g.n(); ++v) m.branch_sets[v] = {v};
        return m;
    }
};

struct ModelCheck {
    bool ok = true;
    std::string violation;
};

/// Checks nonemptiness, pairwise disjointness, connectivity of each G[X_u],
/// and coverage of every pattern edge by a host edge between the branch sets.
inline ModelCheck verify_model(const Graph& pattern, const Graph& host, const MinorModel& model) {
    auto fail = [](const std::string& why) { return ModelCheck{false, why}; };
    if (int(model.branch_sets.size()) != pattern.n()) return fail("one branch set per pattern vertex required");
    VertexSet used(host.n());
    std::vector<VertexSet> sets;
    for (int u = 0; u < pattern.n(); ++u) {
        const auto& bs = model.branch_sets[u];
        if (bs.empty()) return fail("branch set " + std::to_string(u) + " is empty");
        VertexSet x(host.n());
        for (int v : bs) {
            if (v < 0 || v >= host.n()) return fail("branch set " + std::to_string(u) + " has an out-of-range id");
            if (used.test(v)) return fail("branch sets overlap at host vertex " + std::to_string(v));
            used.set(v);
            x.set(v);
        }
        // connectivity of host[X_u]
        VertexSet seen(host.n());
        seen.set(bs[0]);
        std::queue<int> q;
        q.push(bs[0]);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : host.neighbors(v))
                if (x.test(w) && !seen.test(w)) {
                    seen.set(w);
                    q.push(w);
                }
        }
        if (seen != x) return fail("branch set " + std::to_string(u) + " is not connected in the host");
        sets.push_back(std::move(x));
    }
    for (auto [u, v] : pattern.edges()) {
        bool covered = false;
        const auto& small = model.branch_sets[u].size() <= model.branch_sets[v].size() ? model.branch_sets[u]
                                                                                       : model.branch_sets[v];
        const VertexSet& other = model.branch_sets[u].size() <= model.branch_sets[v].size() ? sets[v] : sets[u];
        for (int s : small)
            if (host.neighbor_mask(s).intersects(other)) {
                covered = true;
                break;
            }
        if (!covered)
            return fail("pattern edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} is not covered by a host edge");
    }
    return {};
}

inline bool is_balanced(const MinorModel& model) {
    if (model.branch_sets.empty()) return true;
    size_t s = model.branch_sets[0].size();
    for (const auto& bs : model.branch_sets)
        if (bs.size() != s) return false;
    return true;
}

namespace detail {

/// First `want` vertices of a BFS inside `inside` starting at `from`
/// (prefixes of BFS orders are connected).
inline std::vector<int> bfs_prefix(const Graph& g, const VertexSet& inside, int from, int want) {
    std::vector<int> out;
    VertexSet seen(g.n());
    seen.set(from);
    std::queue<int> q;
    q.push(from);
    while (!q.empty() && int(out.size()) < want) {
        int v = q.front();
        q.pop();
        out.push_back(v);
        for (int w : g.neighbors(v))
            if (inside.test(w) && !seen.test(w)) {
                seen.set(w);
                q.push(w);
            }
    }
    return out;
}

}  // namespace detail

/// Turn a model of K_{2n-1} into a balanced model of K_n: sort branch sets by
/// size, take t = |X_n|, and grow each smaller X_i (i <= n) by a connected
/// chunk of size t - |X_i| from X_{2n-i} that starts at a contact vertex
/// adjacent to X_i.
inline MinorModel balance_clique(const Graph& pattern, const Graph& host, const MinorModel& model,
                                 int* clique_order_out = nullptr) {
    ModelCheck chk = verify_model(pattern, host, model);
    if (!chk.ok) throw std::invalid_argument("balance_clique: invalid input model: " + chk.violation);
    int h = pattern.n();
    if (pattern.m() != h * (h - 1) / 2) throw std::invalid_argument("balance_clique: pattern is not complete");
    if (h % 2 == 0) throw std::invalid_argument("balance_clique: pattern order must be odd (K_{2n-1})");
    int n = (h + 1) / 2;

    std::vector<int> by_size(h);
    for (int i = 0; i < h; ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
        return model.branch_sets[a].size() < model.branch_sets[b].size();
    });
    size_t t = model.branch_sets[by_size[n - 1]].size();

    MinorModel out;
    for (int i = 0; i < n; ++i) {
        std::vector<int> y = model.branch_sets[by_size[i]];
        if (y.size() < t) {
            const auto& donor = model.branch_sets[by_size[2 * n - 2 - i]];  // X_{2n-i} (1-based)
            VertexSet donor_set = VertexSet::from(host.n(), donor);
            VertexSet mine = VertexSet::from(host.n(), y);
            int contact = -1;
            for (int v : donor)
                if (host.neighbor_mask(v).intersects(mine)) {
                    contact = contact < 0 ? v : std::min(contact, v);
                }
            if (contact < 0) throw std::logic_error("balance_clique: no contact vertex; model edge missing");
            auto chunk = detail::bfs_prefix(host, donor_set, contact, int(t - y.size()));
            if (chunk.size() != t - y.size())
                throw std::logic_error("balance_clique: donor branch set too small");
            y.insert(y.end(), chunk.begin(), chunk.end());
        }
        std::sort(y.begin(), y.end());
        out.branch_sets.push_back(std::move(y));
    }
    if (clique_order_out) *clique_order_out = n;
    ModelCheck post = verify_model(complete_graph(n), host, out);
    if (!post.ok) throw std::logic_error("balance_clique: output fails verification: " + post.violation);
    if (!is_balanced(out)) throw std::logic_error("balance_clique: output is not balanced");
    return out;
}

// ---------------------------------------------------------------------------
// Outerplanar embeddings into grids
// ---------------------------------------------------------------------------

struct OuterplanarEmbedding {
    Graph host;        // the n x n grid
    MinorModel model;  // branch sets indexed by pattern vertex
};

namespace detail {

/// Triangulate an outerplanar graph with outer order 0,1,...,n-1: missing
/// outer-cycle edges are added first (the embedding wants a maximal
/// outerplanar host), then every inner face of the circular embedding is
/// fan-triangulated from its lowest-indexed vertex. Throws when chords cross,
/// i.e. when the input is not outerplanar with this vertex order.
inline Graph triangulate_outerplanar(const Graph& input) {
    int n = input.n();
    if (n <= 2) return input;
    // chords must be pairwise non-crossing
    std::vector<std::pair<int, int>> chords;
    for (auto [u, v] : input.edges())
        if (!(v == u + 1 || (u == 0 && v == n - 1))) chords.push_back({u, v});
    auto edges = input.edges();
    for (int i = 0; i < n; ++i) {
        int u = std::min(i, (i + 1) % n), v = std::max(i, (i + 1) % n);
        if (!input.has_edge(u, v)) edges.push_back({u, v});
    }
    Graph g(n, std::move(edges));
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            bool crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if (crossing) throw std::invalid_argument("embed_outerplanar: chords cross; not outerplanar");
        }
    // trace inner faces of the circular embedding: at vertex v the rotation
    // orders neighbors by (w - v) mod n; the next dart after arriving via
    // (u -> v) leaves toward the rotation predecessor of u
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v] = g.neighbors(v);
        std::sort(rot[v].begin(), rot[v].end(),
                  [&](int a, int b) { return (a - v + n) % n < (b - v + n) % n; });
    }
    auto next_dart = [&](int u, int v) {
        const auto& r = rot[v];
        int idx = int(std::find(r.begin(), r.end(), u) - r.begin());
        return std::pair<int, int>(v, r[(idx + r.size() - 1) % r.size()]);
    };
    std::map<std::pair<int, int>, char> seen;
    std::vector<std::vector<int>> faces;
    for (auto [u0, v0] : g.edges())
        for (auto [su, sv] : {std::pair<int, int>(u0, v0), std::pair<int, int>(v0, u0)}) {
            if (seen.count({su, sv})) continue;
            std::vector<int> face;
            int u = su, v = sv;
            do {
                seen[{u, v}] = 1;
                face.push_back(v);
                auto [nu, nv] = next_dart(u, v);
                u = nu;
                v = nv;
            } while (!(u == su && v == sv));
            faces.push_back(std::move(face));
        }
    // the outer face is the one traced in descending circular order; it
    // contains the dart (1 -> 0)
    std::vector<std::pair<int, int>> extra;
    for (const auto& face : faces) {
        bool outer = false;
        for (size_t i = 0; i < face.size(); ++i)
            if (face[i] == 1 && face[(i + 1) % face.size()] == 0) outer = true;
        if (outer) continue;
        int low = *std::min_element(face.begin(), face.end());
        for (int w : face)
            if (w != low && !g.has_edge(low, w)) extra.push_back({std::min(low, w), std::max(low, w)});
    }
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    auto out_edges = g.edges();
    out_edges.insert(out_edges.end(), extra.begin(), extra.end());
    return Graph(n, std::move(out_edges));
}

}  // namespace detail

/// Embed an outerplanar graph (outer cycle = id order) into the n x n grid:
/// after triangulating, vertex k maps to
///   X_k = {(i,k) : ℓ(k) < i <= k} ∪ {(k,j) : k <= j < r(k)}
/// (1-based grid coordinates, row-major host ids), where ℓ(k)/r(k) are the
/// extreme neighbor indices. Every branch set meets the diagonal exactly at
/// (k,k) and never below it.
inline OuterplanarEmbedding embed_outerplanar(const Graph& p) {
    int n = p.n();
    if (n < 1) throw std::invalid_argument("embed_outerplanar: empty pattern");
    OuterplanarEmbedding out;
    out.host = grid_graph(n, n);
    auto id = [&](int i, int j) { return (i - 1) * n + (j - 1); };  // 1-based coords
    if (n == 1) {
        out.model.branch_sets = {{id(1, 1)}};
        return out;
    }
    Graph tri = detail::triangulate_outerplanar(p);
    // 1-based neighbor extremes on the triangulation
    auto lo = [&](int k) {  // min neighbor below k; k in [2, n]
        for (int j = 1; j < k; ++j)
            if (tri.has_edge(j - 1, k - 1)) return j;
        return k - 1;  // isolated side (only possible for n == 2 without the edge)
    };
    auto hi = [&](int k) {  // max neighbor above k; k in [1, n-1]
        for (int j = n; j > k; --j)
            if (tri.has_edge(j - 1, k - 1)) return j;
        return k + 1;
    };
    out.model.branch_sets.resize(n);
    for (int k = 1; k <= n; ++k) {
        std::vector<int>& x = out.model.branch_sets[k - 1];
        if (k == 1) {
            for (int j = 1; j < hi(1); ++j) x.push_back(id(1, j));
        } else if (k == n) {
            for (int i = lo(n); i <= n; ++i) x.push_back(id(i, n));
        } else {
            for (int i = lo(k) + 1; i <= k; ++i) x.push_back(id(i, k));
            for (int j = k; j < hi(k); ++j) x.push_back(id(k, j));
        }
        std::sort(x.begin(), x.end());
        x.erase(std::unique(x.begin(), x.end()), x.end());
    }
    ModelCheck chk = verify_model(p, out.host, out.model);
    if (!chk.ok) throw std::logic_error("embed_outerplanar: output fails verification: " + chk.violation);
    // conditions (a) and (b): unique diagonal vertex, nothing below the diagonal
    for (int k = 1; k <= n; ++k) {
        int diag = 0;
        for (int v : out.model.branch_sets[k - 1]) {
            int i = v / n + 1, j = v % n + 1;
            if (i > j) throw std::logic_error("embed_outerplanar: branch set dips below the diagonal");
            if (i == j) {
                ++diag;
                if (i != k) throw std::logic_error("embed_outerplanar: wrong diagonal vertex");
            }
        }
        if (diag != 1) throw std::logic_error("embed_outerplanar: diagonal vertex not unique");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Balanced outerplanar models in large grids (rows = n^2, cols = 4n)
// ---------------------------------------------------------------------------

/// Balanced minor model of an n-vertex outerplanar pattern in a host that
/// contains a model of the (n^2 x 4n) grid. Picks the minimum-weight n x n
/// cell (lexicographically first tie-break), places the grid embedding in the
/// cell with its free half toward the two spare column blocks, routes one
/// corridor leg per pattern vertex to a private reservoir cell, and equalizes
/// branch-set sizes by extending along the legs.
inline MinorModel balanced_outerplanar_in_grid(const Graph& p, const Graph& host, const MinorModel& grid_model) {
    int n = p.n();
    if (n < 1) throw std::invalid_argument("balanced_outerplanar_in_grid: empty pattern");
    const long long rows = (long long)n * n, cols = 4ll * n;
    Graph big = grid_graph(int(rows), int(cols));
    ModelCheck chk = verify_model(big, host, grid_model);
    if (!chk.ok)
        throw std::invalid_argument("balanced_outerplanar_in_grid: invalid host grid model: " + chk.violation);

    if (n == 1) {
        MinorModel out;
        out.branch_sets = {grid_model.branch_sets[0]};
        ModelCheck post = verify_model(p, host, out);
        if (!post.ok) throw std::logic_error("balanced_outerplanar_in_grid: " + post.violation);
        return out;
    }

    // choose the min-weight cell (a*, b*) over row blocks a in [1,n], column
    // blocks b in [1,4]
    auto cell_weight = [&](int a, int b) {
        long long w = 0;
        for (int r = (a - 1) * n + 1; r <= a * n; ++r)
            for (int c = (b - 1) * n + 1; c <= b * n; ++c)
                w += (long long)grid_model.branch_sets[(r - 1) * cols + (c - 1)].size();
        return w;
    };
    int best_a = 1, best_b = 1;
    long long best_w = -1;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= 4; ++b) {
            long long w = cell_weight(a, b);
            if (best_w < 0 || w < best_w) {
                best_w = w;
                best_a = a;
                best_b = b;
            }
        }
    // mirror columns so the chosen cell has two blocks to its left
    bool mirrored = best_b <= 2;
    auto pos = [&](long long r, long long c) {  // logical (row, col), 1-based
        long long cc = mirrored ? cols + 1 - c : c;
        return grid_model.branch_sets[(r - 1) * cols + (cc - 1)];
    };
    int bstar = mirrored ? 5 - best_b : best_b;  // >= 3 in logical coords
    int astar = best_a;

    OuterplanarEmbedding emb = embed_outerplanar(p);

    // in-cell placement: embedding coordinates (i,j) -> logical grid position
    // (row (a*-1)n + (n+1-i), col (b*-1)n + j). The image of the upper
    // triangle is the lower-right half, so rows toward the corridor are free.
    auto place = [&](int i, int j) {
        return std::pair<long long, long long>((astar - 1) * (long long)n + (n + 1 - i),
                                               (long long)(bstar - 1) * n + j);
    };

    // base sets: the embedded branch sets, mapped through the host model
    std::vector<std::vector<int>> base(n);
    std::vector<char> taken(host.n(), 0);
    auto append_cellset = [&](std::vector<int>& dst, const std::vector<int>& hostset) {
        for (int v : hostset) {
            dst.push_back(v);
            taken[v] = 1;
        }
    };
    for (int v = 0; v < n; ++v)
        for (int cell : emb.model.branch_sets[v]) {
            int i = cell / n + 1, j = cell % n + 1;
            auto [r, c] = place(i, j);
            append_cellset(base[v], pos(r, c));
        }

    // legs: vertex v exits at local row rho = n+1-v (1-based v), walks left
    // inside the cell, crosses the corridor block b*-1 on its own lane and
    // enters reservoir cell (rho, b*-2); the straight leg rho = a* skips the
    // lane. Grid positions per leg, in walk order:
    std::vector<std::vector<std::pair<long long, long long>>> leg(n);
    for (int v1 = 1; v1 <= n; ++v1) {
        int rho = n + 1 - v1;  // exit-row rank, also the reservoir row block
        auto& L = leg[v1 - 1];
        long long exit_row = (astar - 1) * (long long)n + rho;
        for (int j = v1 - 1; j >= 1; --j) L.push_back({exit_row, (long long)(bstar - 1) * n + j});
        long long tau = (long long)(rho - 1) * n + rho;  // target row inside block rho
        long long corridor_hi = (long long)(bstar - 1) * n;  // rightmost corridor column
        long long corridor_lo = (long long)(bstar - 2) * n + 1;
        if (rho == astar) {
            for (long long c = corridor_hi; c >= corridor_lo; --c) L.push_back({exit_row, c});
        } else {
            int rank = rho < astar ? astar - rho : rho - astar;
            long long lane = (long long)(bstar - 2) * n + rank;
            for (long long c = corridor_hi; c >= lane; --c) L.push_back({exit_row, c});
            if (tau < exit_row)
                for (long long r = exit_row - 1; r >= tau; --r) L.push_back({r, lane});
            else
                for (long long r = exit_row + 1; r <= tau; ++r) L.push_back({r, lane});
            for (long long c = lane - 1; c >= corridor_lo; --c) L.push_back({tau, c});
        }
        // enter the reservoir cell (row block rho, column block b*-2) and
        // snake through it
        long long target_row = rho == astar ? exit_row : tau;
        long long res_lo = (long long)(bstar - 3) * n + 1, res_hi = (long long)(bstar - 2) * n;
        std::vector<long long> row_order{target_row};
        for (long long d = 1; d < n; ++d) {
            if (target_row + d <= (long long)rho * n) row_order.push_back(target_row + d);
            if (target_row - d >= (long long)(rho - 1) * n + 1) row_order.push_back(target_row - d);
        }
        // snake: alternate sweep direction so consecutive cells stay adjacent
        bool left = true;
        for (long long r : row_order) {
            if (left)
                for (long long c = res_hi; c >= res_lo; --c) L.push_back({r, c});
            else
                for (long long c = res_lo; c <= res_hi; ++c) L.push_back({r, c});
            left = !left;
        }
    }

    // equalize: grow each base set along its leg, flattening host branch sets
    // in BFS order so every prefix stays connected
    size_t target = 0;
    for (const auto& b : base) target = std::max(target, b.size());
    MinorModel out;
    out.branch_sets.resize(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> omega = base[v];
        size_t li = 0;
        std::vector<int> pending;
        size_t pi = 0;
        while (omega.size() < target) {
            if (pi < pending.size()) {
                omega.push_back(pending[pi++]);
                continue;
            }
            if (li >= leg[v].size())
                throw std::logic_error("balanced_outerplanar_in_grid: leg exhausted before balancing");
            auto [r, c] = leg[v][li++];
            const std::vector<int>& hostset = pos(r, c);
            // order the fresh branch set by BFS from a vertex adjacent to what
            // we already hold (host sets of adjacent grid cells touch)
            VertexSet inside = VertexSet::from(host.n(), hostset);
            VertexSet held = VertexSet::from(host.n(), omega);
            int start = -1;
            for (int h : hostset)
                if (host.neighbor_mask(h).intersects(held)) start = start < 0 ? h : std::min(start, h);
            if (start < 0) throw std::logic_error("balanced_outerplanar_in_grid: leg cell not adjacent");
            pending = detail::bfs_prefix(host, inside, start, int(hostset.size()));
            pi = 0;
            for (int h : pending)
                if (taken[h]) throw std::logic_error("balanced_outerplanar_in_grid: leg collision");
        }
        for (int h : omega) taken[h] = 1;
        std::sort(omega.begin(), omega.end());
        out.branch_sets[v] = std::move(omega);
    }
    ModelCheck post = verify_model(p, host, out);
    if (!post.ok) throw std::logic_error("balanced_outerplanar_in_grid: output fails verification: " + post.violation);
    if (!is_balanced(out)) throw std::logic_error("balanced_outerplanar_in_grid: output not balanced");
    return out;
}

/// Convenience overload with the grid itself as host (identity model).
inline std::pair<Graph, MinorModel> balanced_outerplanar_in_grid(const Graph& p) {
    Graph host = grid_graph(p.n() * p.n(), 4 * p.n());
    MinorModel id = MinorModel::identity(host);
    return {host, balanced_outerplanar_in_grid(p, host, id)};
}

// ---------------------------------------------------------------------------
// Text format: one line per pattern vertex, 'u: h1 h2 ...'
// ---------------------------------------------------------------------------

inline MinorModel read_model(std::istream& in) {
    MinorModel m;
    std::string line;
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ls(line);
        std::string utok;
        if (!(ls >> utok) || utok.back() != ':') throw ParseError("model: bad line '" + line + "'");
        size_t u = std::stoul(utok.substr(0, utok.size() - 1));
        if (u != m.branch_sets.size()) throw ParseError("model: vertices must appear in order 0,1,...");
        std::vector<int> bs;
        long long v;
        while (ls >> v) bs.push_back(int(v));
        std::sort(bs.begin(), bs.end());
        m.branch_sets.push_back(std::move(bs));
    }
    return m;
}

inline void write_model(std::ostream& out, const MinorModel& m) {
    for (size_t u = 0; u < m.branch_sets.size(); ++u) {
        out << u << ":";
        for (int v : m.branch_sets[u]) out << " " << v;
        out << "\n";
    }
}

inline MinorModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file: " + path);
    return read_model(in);
}

inline void save_model(const std::string& path, const MinorModel& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write model file: " + path);
    write_model(out, m);
}

}  // namespace copwidth
