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

/// Rooted tree decomposition with ordered children (order distinguishes the
/// left and right child of a binary node).
struct TreeDecomposition {
    struct Node {
        std::vector<int> bag;  // sorted vertex ids
        int parent = -1;
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = -1;

    int width() const {
        int w = -1;
        for (const auto& nd : nodes) w = std::max(w, int(nd.bag.size()) - 1);
        return w;
    }
};

struct TdCheck {
    bool ok = true;
    std::string violation;
};

/// Checks the three tree-decomposition conditions plus tree well-formedness.
inline TdCheck verify_td(const Graph& g, const TreeDecomposition& td) {
    auto fail = [](const std::string& why) { return TdCheck{false, why}; };
    if (td.nodes.empty() || td.root < 0 || td.root >= int(td.nodes.size())) return fail("no root");
    // tree shape
    std::vector<int> seen(td.nodes.size(), 0);
    std::vector<int> stack{td.root};
    if (td.nodes[td.root].parent != -1) return fail("root has a parent");
    int visited = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (seen[u]++) return fail("node visited twice (cycle)");
        ++visited;
        for (int c : td.nodes[u].children) {
            if (c < 0 || c >= int(td.nodes.size())) return fail("child index out of range");
            if (td.nodes[c].parent != u) return fail("parent/child mismatch");
            stack.push_back(c);
        }
    }
    if (visited != int(td.nodes.size())) return fail("decomposition tree is disconnected");
    // bags cover vertices and edges
    VertexSet covered(g.n());
    for (const auto& nd : td.nodes)
        for (int v : nd.bag) {
            if (v < 0 || v >= g.n()) return fail("bag vertex out of range");
            covered.set(v);
        }
    if (covered != VertexSet::full(g.n())) return fail("bags do not cover all vertices");
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (const auto& nd : td.nodes) {
            if (std::binary_search(nd.bag.begin(), nd.bag.end(), u) &&
                std::binary_search(nd.bag.begin(), nd.bag.end(), v)) {
                ok = true;
                break;
            }
        }
        if (!ok) return fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} in no bag");
    }
    // per-vertex connectivity
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> holding;
        for (int i = 0; i < int(td.nodes.size()); ++i)
            if (std::binary_search(td.nodes[i].bag.begin(), td.nodes[i].bag.end(), v)) holding.push_back(i);
        if (holding.empty()) continue;
        // count nodes of `holding` whose parent is not in `holding`; must be 1
        int roots = 0;
        for (int i : holding) {
            int p = td.nodes[i].parent;
            if (p < 0 || !std::binary_search(td.nodes[p].bag.begin(), td.nodes[p].bag.end(), v)) ++roots;
        }
        if (roots != 1) return fail("bags of vertex " + std::to_string(v) + " are not connected");
    }
    return {};
}

enum class NodeKind { Start, Introduce, Forget, Join };

/// Nice decomposition: start/introduce/forget/join kinds, join bags equal,
/// introduce/forget change the bag by one vertex, root bag has size 1.
struct NiceTreeDecomposition {
    TreeDecomposition td;
    std::vector<NodeKind> kind;
};

inline TdCheck verify_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
    TdCheck base = verify_td(g, ntd.td);
    if (!base.ok) return base;
    auto fail = [](const std::string& why) { return TdCheck{false, why}; };
    const auto& nodes = ntd.td.nodes;
    if (ntd.kind.size() != nodes.size()) return fail("kind vector size mismatch");
    if (nodes[ntd.td.root].bag.size() != 1) return fail("root bag must have size 1");
    for (size_t i = 0; i < nodes.size(); ++i) {
        const auto& nd = nodes[i];
        switch (ntd.kind[i]) {
            case NodeKind::Start:
                if (!nd.children.empty()) return fail("start node with children");
                break;
            case NodeKind::Join: {
                if (nd.children.size() != 2) return fail("join node without two children");
                const auto& l = nodes[nd.children[0]].bag;
                const auto& r = nodes[nd.children[1]].bag;
                if (l != nd.bag || r != nd.bag) return fail("join bags differ");
                break;
            }
            case NodeKind::Introduce:
            case NodeKind::Forget: {
                if (nd.children.size() != 1) return fail("unary node without one child");
                const auto& c = nodes[nd.children[0]].bag;
                const auto& b = nd.bag;
                bool intro = ntd.kind[i] == NodeKind::Introduce;
                const auto& big = intro ? b : c;
                const auto& small = intro ? c : b;
                if (big.size() != small.size() + 1) return fail("unary node bag sizes differ by != 1");
                if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
                    return fail("unary node bags not nested");
                break;
            }
        }
    }
    return {};
}

/// Transform a valid decomposition into a nice one of the same width with a
/// size-1 root bag. Redundant bags (contained in a neighbor) are contracted
/// first; on artifact-produced decompositions the result has at most
/// 4n + width + 1 nodes.
inline NiceTreeDecomposition make_nice(const Graph& g, TreeDecomposition td) {
    TdCheck chk = verify_td(g, td);
    if (!chk.ok) throw std::invalid_argument("make_nice: invalid tree decomposition: " + chk.violation);

    // --- contraction: drop bags contained in their parent or only child ---
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < int(td.nodes.size()) && !changed; ++u) {
            int p = td.nodes[u].parent;
            if (p < 0) continue;
            const auto& ub = td.nodes[u].bag;
            const auto& pb = td.nodes[p].bag;
            if (std::includes(pb.begin(), pb.end(), ub.begin(), ub.end())) {
                // splice u into p: u's children take its place, in order
                auto& pc = td.nodes[p].children;
                auto it = std::find(pc.begin(), pc.end(), u);
                it = pc.erase(it);
                for (int c : td.nodes[u].children) {
                    it = pc.insert(it, c) + 1;
                    td.nodes[c].parent = p;
                }
                td.nodes[u].children.clear();
                td.nodes[u].parent = -2;  // detached
                changed = true;
            } else if (td.nodes[p].children.size() == 1 &&
                       std::includes(ub.begin(), ub.end(), pb.begin(), pb.end())) {
                // parent's bag is redundant: parent adopts u's bag and children
                td.nodes[p].bag = ub;
                td.nodes[p].children = td.nodes[u].children;
                for (int c : td.nodes[u].children) td.nodes[c].parent = p;
                td.nodes[u].children.clear();
                td.nodes[u].parent = -2;
                changed = true;
            }
        }
    }
    if (td.nodes[td.root].bag.empty()) {
        // re-root at some node with a nonempty bag (possible iff G has vertices)
        for (int u = 0; u < int(td.nodes.size()); ++u) {
            if (td.nodes[u].parent == -2 || td.nodes[u].bag.empty()) continue;
            // reverse the parent chain from u to the old root
            int cur = u, prev = -1;
            while (cur != -1) {
                int nxt = td.nodes[cur].parent;
                if (prev != -1) {
                    auto& ch = td.nodes[cur].children;
                    ch.erase(std::find(ch.begin(), ch.end(), prev));
                }
                if (nxt != -1) td.nodes[cur].children.push_back(nxt);
                td.nodes[cur].parent = prev;
                prev = cur;
                cur = nxt;
            }
            td.root = u;
            break;
        }
    }

    // --- recursive nice construction ---
    NiceTreeDecomposition out;
    auto add_node = [&](std::vector<int> bag, NodeKind kind, std::vector<int> children) {
        int id = int(out.td.nodes.size());
        out.td.nodes.push_back({std::move(bag), -1, std::move(children)});
        out.kind.push_back(kind);
        for (int c : out.td.nodes[id].children) out.td.nodes[c].parent = id;
        return id;
    };
    // lift node `bottom` (bag `from`) to bag `to` via forget then introduce steps
    auto lift = [&](int bottom, const std::vector<int>& from, const std::vector<int>& to) {
        int cur = bottom;
        std::vector<int> bag = from;
        for (int v : from)
            if (!std::binary_search(to.begin(), to.end(), v)) {
                bag.erase(std::find(bag.begin(), bag.end(), v));
                cur = add_node(bag, NodeKind::Forget, {cur});
            }
        for (int v : to)
            if (!std::binary_search(from.begin(), from.end(), v)) {
                bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
                cur = add_node(bag, NodeKind::Introduce, {cur});
            }
        return cur;
    };
    auto build = [&](auto&& self, int u) -> int {
        const auto& bag = td.nodes[u].bag;
        std::vector<int> lifted;
        for (int c : td.nodes[u].children) {
            int sub = self(self, c);
            lifted.push_back(lift(sub, td.nodes[c].bag, bag));
        }
        if (lifted.empty()) return add_node(bag, NodeKind::Start, {});
        int cur = lifted[0];
        for (size_t i = 1; i < lifted.size(); ++i) cur = add_node(bag, NodeKind::Join, {cur, lifted[i]});
        return cur;
    };
    int top = build(build, td.root);
    // shrink the root bag to a single vertex by forgetting all but the smallest
    std::vector<int> bag = out.td.nodes[top].bag;
    while (bag.size() > 1) {
        bag.pop_back();
        top = add_node(bag, NodeKind::Forget, {top});
    }
    out.td.root = top;
    return out;
}

// ---------------------------------------------------------------------------
// PACE-style text format:  's td <bags> <max_bag_size> <n>', bag lines
// 'b <id> v1 v2 ...' (bag ids 1-based, vertex ids 0-based to match the graph
// format), then tree edges '<id1> <id2>'. The tree is rooted at bag 1 and a
// node's children are ordered by the appearance of its tree edges.
// ---------------------------------------------------------------------------

inline TreeDecomposition read_tree_decomposition(std::istream& in) {
    TreeDecomposition td;
    std::string line;
    long long bags = -1, maxbag = 0, n = 0;
    std::vector<std::pair<int, int>> tree_edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == '#') continue;
        if (tok == "s") {
            std::string td_tok;
            if (!(ls >> td_tok >> bags >> maxbag >> n) || td_tok != "td")
                throw ParseError("td: bad solution line '" + line + "'");
            td.nodes.assign(bags, {});
        } else if (tok == "b") {
            long long id;
            if (!(ls >> id) || bags < 0 || id < 1 || id > bags) throw ParseError("td: bad bag line '" + line + "'");
            long long v;
            std::vector<int> bag;
            while (ls >> v) bag.push_back(int(v));
            std::sort(bag.begin(), bag.end());
            td.nodes[id - 1].bag = std::move(bag);
        } else {
            long long a = -1, b = -1;
            try {
                a = std::stoll(tok);
            } catch (const std::exception&) {
                throw ParseError("td: unexpected line '" + line + "'");
            }
            if (!(ls >> b) || bags < 0 || a < 1 || a > bags || b < 1 || b > bags)
                throw ParseError("td: bad tree edge '" + line + "'");
            tree_edges.push_back({int(a - 1), int(b - 1)});
        }
    }
    if (bags < 0) throw ParseError("td: missing 's td' line");
    if (int(tree_edges.size()) != int(bags) - 1) throw ParseError("td: expected bags-1 tree edges");
    // root at bag 1; orient edges by BFS in file order
    std::vector<std::vector<int>> inc(bags);
    for (int i = 0; i < int(tree_edges.size()); ++i) {
        inc[tree_edges[i].first].push_back(i);
        inc[tree_edges[i].second].push_back(i);
    }
    std::vector<char> placed(bags, 0);
    std::vector<int> order{0};
    placed[0] = 1;
    td.root = 0;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int u = order[qi];
        for (int ei : inc[u]) {
            int other = tree_edges[ei].first == u ? tree_edges[ei].second : tree_edges[ei].first;
            if (placed[other]) continue;
            placed[other] = 1;
            td.nodes[other].parent = u;
            td.nodes[u].children.push_back(other);
            order.push_back(other);
        }
    }
    for (char p : placed)
        if (!p) throw ParseError("td: tree edges do not form a tree");
    return td;
}

inline void write_tree_decomposition(std::ostream& out, const TreeDecomposition& td, int n) {
    int maxbag = 0;
    for (const auto& nd : td.nodes) maxbag = std::max(maxbag, int(nd.bag.size()));
    out << "s td " << td.nodes.size() << " " << maxbag << " " << n << "\n";
    // emit with the root as bag 1 (BFS renumbering)
    std::vector<int> order{td.root}, newid(td.nodes.size(), -1);
    newid[td.root] = 0;
    for (size_t qi = 0; qi < order.size(); ++qi)
        for (int c : td.nodes[order[qi]].children) {
            newid[c] = int(order.size());
            order.push_back(c);
        }
    for (size_t i = 0; i < order.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.nodes[order[i]].bag) out << " " << v;
        out << "\n";
    }
    for (size_t i = 0; i < order.size(); ++i)
        for (int c : td.nodes[order[i]].children) out << i + 1 << " " << newid[c] + 1 << "\n";
}

inline TreeDecomposition load_tree_decomposition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tree decomposition file: " + path);
    return read_tree_decomposition(in);
}

}  // namespace copwidth
