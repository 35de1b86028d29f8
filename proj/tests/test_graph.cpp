#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "copwidth/graph.hpp"

using namespace copwidth;

TEST_CASE("neighborhood matches the definition") {
    Graph p3 = path_graph(3);
    CHECK(neighborhood(p3, VertexSet::of(3, {0})) == VertexSet::of(3, {1}));
    CHECK(neighborhood(p3, VertexSet::full(3)) == VertexSet(3));

    Graph c5 = cycle_graph(5);
    CHECK(neighborhood(c5, VertexSet::of(5, {0, 2})) == VertexSet::of(5, {1, 3, 4}));
}

TEST_CASE("neighborhood never meets its argument") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(8, 40, rng());
        VertexSet a(8);
        for (int v = 0; v < 8; ++v)
            if (rng() & 1) a.set(v);
        CHECK(!neighborhood(g, a).intersects(a));
        CHECK(spread(g, a) == (a | neighborhood(g, a)));
    }
}

TEST_CASE("generator sizes") {
    CHECK(grid_graph(2, 3).n() == 6);
    CHECK(grid_graph(2, 3).m() == 7);
    CHECK(complete_binary_tree(2).n() == 7);
    CHECK(complete_binary_tree(2).m() == 6);
    CHECK(half_grid_graph(3).n() == 6);
    CHECK(complete_graph(4).m() == 6);
    CHECK(complete_bipartite_graph(2, 3).m() == 6);
    CHECK(path_power_graph(5, 2).m() == 7);
    CHECK_THROWS_AS(generate("nosuch", {3}, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate("path", {0}, 0), std::invalid_argument);
}

TEST_CASE("generators are pure functions of (family, params, seed)") {
    for (uint64_t seed : {0ull, 42ull}) {
        Graph a = random_maximal_outerplanar(9, seed);
        Graph b = random_maximal_outerplanar(9, seed);
        CHECK(a.edges() == b.edges());
        CHECK(random_graph(8, 30, seed).edges() == random_graph(8, 30, seed).edges());
    }
}

TEST_CASE("random maximal outerplanar graphs are triangulated polygons") {
    std::mt19937_64 rng(3);
    for (int n = 3; n <= 10; ++n) {
        Graph g = random_maximal_outerplanar(n, rng());
        CHECK(g.m() == 2 * n - 3);  // maximal outerplanar edge count
        for (int i = 0; i < n; ++i) CHECK(g.has_edge(i, (i + 1) % n));
    }
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("diameter and max degree") {
    CHECK(path_graph(4).diameter() == 3);
    CHECK(complete_graph(5).diameter() == 1);
    CHECK(!Graph(4, {{0, 1}, {2, 3}}).diameter().has_value());
    CHECK(complete_binary_tree(3).max_degree() == 3);
}

TEST_CASE("subdivide examples") {
    SECTION("identity") {
        Graph k3 = complete_graph(3);
        auto [h, map] = subdivide(k3, {1, 1, 1});
        CHECK(h.n() == 3);
        CHECK(h.edges() == k3.edges());
    }
    SECTION("K3 with all lengths 2 is C6") {
        Graph k3 = complete_graph(3);
        auto [h, map] = subdivide(k3, {2, 2, 2});
        CHECK(h.n() == 6);
        CHECK(h.m() == 6);
        for (int v = 0; v < 6; ++v) CHECK(h.degree(v) == 2);
        CHECK(h.diameter() == 3);
    }
    SECTION("single edge subdivided to length 5 is a path on 6 vertices") {
        Graph e(2, {{0, 1}});
        auto [h, map] = subdivide(e, {5});
        CHECK(h.n() == 6);
        CHECK(h.max_degree() == 2);
        CHECK(h.diameter() == 5);
        CHECK(map.paths[0].front() == 0);
        CHECK(map.paths[0].back() == 1);
        CHECK(map.paths[0].size() == 6);
    }
    SECTION("lengths must be positive and one per edge") {
        Graph k3 = complete_graph(3);
        CHECK_THROWS_AS(subdivide(k3, {0, 1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(subdivide(k3, {1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(subdivide(k3, {1000000, 1, 1}, 100), ResourceLimitError);
    }
}

TEST_CASE("contracting the inserted paths recovers the original edge set") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(7, 45, rng());
        std::vector<long long> lens;
        for (int i = 0; i < g.m(); ++i) lens.push_back(1 + int(rng() % 4));
        auto [h, map] = subdivide(g, lens);
        long long expect = g.n();
        for (auto l : lens) expect += l - 1;
        CHECK(h.n() == expect);
        // contract: each path maps back to its original endpoint pair
        std::set<std::pair<int, int>> contracted;
        for (int e = 0; e < g.m(); ++e) {
            const auto& p = map.paths[e];
            for (size_t j = 0; j + 1 < p.size(); ++j) CHECK(h.has_edge(p[j], p[j + 1]));
            contracted.insert({std::min(p.front(), p.back()), std::max(p.front(), p.back())});
        }
        std::set<std::pair<int, int>> orig(g.edges().begin(), g.edges().end());
        CHECK(contracted == orig);
        // internal vertices all have degree 2
        for (int v = g.n(); v < h.n(); ++v) CHECK(h.degree(v) == 2);
    }
}

TEST_CASE("graph text io round trip") {
    Graph g = random_maximal_outerplanar(7, 5);
    std::stringstream ss;
    ss << "# a comment\n";
    write_graph(ss, g);
    Graph g2 = read_graph(ss);
    CHECK(g2.n() == g.n());
    CHECK(g2.edges() == g.edges());

    std::stringstream bad("3 1\n2 1\n");
    CHECK_THROWS_AS(read_graph(bad), ParseError);
    std::stringstream bad2("3\n");
    CHECK_THROWS_AS(read_graph(bad2), ParseError);
}
