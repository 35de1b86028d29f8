#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "copwidth/solver.hpp"
#include "copwidth/transforms.hpp"
#include "test_util.hpp"

using namespace copwidth;
using namespace copwidth::testutil;

TEST_CASE("double_speed examples") {
    SECTION("P4 sweep becomes a two-round radius-2 win") {
        Graph p4 = path_graph(4);
        auto out = double_speed(p4, strat(GameKind::Bcw, 1, 2, {{0, 1}, {1, 2}, {2, 3}}));
        REQUIRE(out.rounds.size() == 2);
        CHECK(out.rounds[0] == std::vector<int>{0, 1, 2});
        CHECK(out.rounds[1] == std::vector<int>{2, 3});
        CHECK(out.radius == 2);
        CHECK(verify(p4, out).status == VerifyStatus::Win);
    }
    SECTION("single-round strategies stay single-round") {
        Graph k2 = complete_graph(2);
        auto out = double_speed(k2, strat(GameKind::Bcw, 1, 2, {{0, 1}}));
        REQUIRE(out.rounds.size() == 1);
        CHECK(out.rounds[0] == std::vector<int>{0, 1});
    }
    SECTION("non-winning input is rejected") {
        CHECK_THROWS_AS(double_speed(path_graph(4), strat(GameKind::Bcw, 1, 1, {{0}})), std::invalid_argument);
        CHECK_THROWS_AS(double_speed(path_graph(4), strat(GameKind::Bcw, kRadiusInf, 4, {{0, 1, 2, 3}})),
                        std::invalid_argument);
    }
}

TEST_CASE("double_speed keeps the doubled trace ahead of the original") {
    // cleaned set at radius-2r round i contains the radius-r cleaned set at round 2i
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(5 + int(rng() % 3), rng);
        auto res = compute(g, GameKind::Bcw, 1);
        auto fast = double_speed(g, res.witness);
        CHECK(fast.budget == 2 * res.witness.budget);
        auto slow_tr = verify(g, res.witness).trace;
        auto fast_tr = verify(g, fast).trace;
        REQUIRE(fast_tr.contaminated.back().empty());
        std::vector<std::vector<int>> padded = res.witness.rounds;
        if (padded.size() % 2) padded.push_back(padded.back());
        // A^{2r}_i ⊆ A^r_{2i}; the padded round can only shrink the slow trace
        auto slow_padded = verify(g, strat(GameKind::Bcw, 1, res.value, padded)).trace;
        for (size_t i = 0; i < fast_tr.contaminated.size(); ++i) {
            size_t j = std::min(2 * i, slow_padded.contaminated.size() - 1);
            CHECK(slow_padded.contaminated[j].contains(fast_tr.contaminated[i]));
        }
    }
}

TEST_CASE("hunter_to_cop") {
    SECTION("star: shooting the center twice becomes N[center] twice") {
        Graph star = complete_bipartite_graph(1, 3);
        auto out = hunter_to_cop(star, strat(GameKind::Hunt, 1, 1, {{0}, {0}}));
        CHECK(out.rounds[0] == std::vector<int>{0, 1, 2, 3});
        CHECK(verify(star, out).status == VerifyStatus::Win);
        CHECK(out.budget == (star.max_degree() + 1) * 1);
    }
    SECTION("K2: shoot one endpoint twice (alternating shots never win a hunt)") {
        Graph k2 = complete_graph(2);
        CHECK(verify(k2, strat(GameKind::Hunt, 1, 1, {{0}, {1}})).status == VerifyStatus::Lose);
        auto out = hunter_to_cop(k2, strat(GameKind::Hunt, 1, 1, {{0}, {0}}));
        CHECK(out.rounds[0] == std::vector<int>{0, 1});
        CHECK(verify(k2, out).status == VerifyStatus::Win);
    }
    SECTION("isolated vertices violate the theorem hypothesis") {
        Graph iso(3, {{0, 1}});
        CHECK_THROWS_AS(hunter_to_cop(iso, strat(GameKind::Hunt, 1, 3, {{0, 1, 2}})), std::invalid_argument);
    }
    SECTION("random trees") {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 15; ++trial) {
            Graph t = random_tree(4 + int(rng() % 5), rng);
            auto res = compute(t, GameKind::Hunt);
            auto out = hunter_to_cop(t, res.witness);
            CHECK(verify(t, out).status == VerifyStatus::Win);
            CHECK(out.max_round_size() <= (t.max_degree() + 1) * res.value);
        }
    }
}

TEST_CASE("zerovis_to_cop") {
    SECTION("K2 walker becomes the two-round blind strategy") {
        Graph k2 = complete_graph(2);
        auto out = zerovis_to_cop(k2, strat(GameKind::ZeroVis, 1, 1, {{0}, {1}}));
        REQUIRE(out.rounds.size() == 2);
        CHECK(out.rounds[0] == std::vector<int>{0, 1});
        CHECK(out.rounds[1] == std::vector<int>{1});
        CHECK(verify(k2, out).status == VerifyStatus::Win);
    }
    SECTION("constant full occupation maps to itself") {
        Graph p3 = path_graph(3);
        auto out = zerovis_to_cop(p3, strat(GameKind::ZeroVis, 1, 3, {{0, 1, 2}, {0, 1, 2}}));
        for (const auto& r : out.rounds.front()) CHECK((r >= 0 && r <= 2));
        CHECK(out.rounds[0].size() == 3);
    }
    SECTION("solver witnesses transform and stay within 2k") {
        std::mt19937_64 rng(89);
        for (int trial = 0; trial < 12; ++trial) {
            Graph g = random_connected_graph(4 + int(rng() % 3), rng);
            auto res = compute(g, GameKind::ZeroVis);
            auto out = zerovis_to_cop(g, res.witness);
            CHECK(verify(g, out).status == VerifyStatus::Win);
            CHECK(out.max_round_size() <= 2 * res.value);
        }
    }
}

TEST_CASE("cop_to_zerovis") {
    SECTION("K2 radius-1 strategy walks with two cops") {
        Graph k2 = complete_graph(2);
        auto out = cop_to_zerovis(k2, strat(GameKind::Bcw, 1, 2, {{0, 1}}));
        CHECK(verify(k2, out).status == VerifyStatus::Win);
        CHECK(out.max_round_size() <= 4);
    }
    SECTION("P3 radius-2 strategy") {
        Graph p3 = path_graph(3);
        auto res = compute(p3, GameKind::Bcw, 2);
        auto out = cop_to_zerovis(p3, res.witness);
        CHECK(verify(p3, out).status == VerifyStatus::Win);
        CHECK(out.max_round_size() <= 2 * res.value);
    }
    SECTION("disconnected graphs are rejected") {
        Graph two(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(cop_to_zerovis(two, strat(GameKind::Bcw, 1, 4, {{0, 1, 2, 3}})), std::invalid_argument);
    }
    SECTION("random connected graphs, diameter-radius witnesses") {
        std::mt19937_64 rng(97);
        for (int trial = 0; trial < 12; ++trial) {
            Graph g = random_connected_graph(4 + int(rng() % 3), rng);
            int d = std::max(1, *g.diameter());
            auto res = compute(g, GameKind::Bcw, d);
            auto out = cop_to_zerovis(g, res.witness);
            CHECK(verify(g, out).status == VerifyStatus::Win);
            CHECK(out.max_round_size() <= 2 * res.value);
        }
    }
}

TEST_CASE("doubling up to the diameter gives walking cops within 4dk") {
    // radius-1 witness -> double_speed until the radius reaches the diameter
    // -> cop_to_zerovis; the budget stays within 4 * d * bcw_1
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_connected_graph(4 + int(rng() % 3), rng);
        int d = std::max(1, *g.diameter());
        auto base = compute(g, GameKind::Bcw, 1);
        CopStrategy s = base.witness;
        while (s.radius < d) s = double_speed(g, s);
        CopStrategy walking = cop_to_zerovis(g, s);
        CHECK(verify(g, walking).status == VerifyStatus::Win);
        CHECK(walking.max_round_size() <= 4 * d * base.value);
    }
}

TEST_CASE("flip round trips") {
    SECTION("cop -> flip -> cop on K2") {
        Graph k2 = complete_graph(2);
        auto base = strat(GameKind::Bcw, 3, 2, {{0, 1}});
        FlipStrategy fs = cop_to_flip(k2, base);
        auto back = flip_to_cop(k2, fs);
        CHECK(verify(k2, back).status == VerifyStatus::Win);
    }
    SECTION("subcubic trees stay within the stated budgets") {
        std::mt19937_64 rng(101);
        for (int trial = 0; trial < 10; ++trial) {
            Graph t = random_subcubic_tree(6 + int(rng() % 5), rng);
            auto res = compute(t, GameKind::Bcw, 3);
            FlipStrategy fs = cop_to_flip(t, res.witness);
            int k = fs.width();
            CHECK(k <= res.value + (1 << res.value));
            auto back = flip_to_cop(t, fs);
            CHECK(verify(t, back).status == VerifyStatus::Win);
            int delta = t.max_degree();
            CHECK(back.max_round_size() <= 2 * k * (delta + 1) * (delta + 1));
        }
    }
    SECTION("a never-isolating flip strategy is rejected") {
        Graph p4 = path_graph(4);
        FlipStrategy identity;
        identity.radius = 3;
        FlipRound r;
        r.part_of.assign(4, 0);
        identity.rounds.assign(3, r);
        CHECK_THROWS_AS(flip_to_cop(p4, identity), std::invalid_argument);
    }
}
