#include "doctest.h"

#include <random>

#include "jgrog/competition.hpp"
#include "jgrog/error.hpp"
#include "jgrog/jaco.hpp"
#include "jgrog/webs.hpp"
#include "oracles.hpp"

using namespace jgrog;

TEST_CASE("C(J_5) and C(J_6)") {
    const auto c5 = competition_graph(build_jaco(5).digraph);
    CHECK(c5.graph.edges() == std::vector<Edge>{{3, 4}});
    CHECK(c5.isolated == std::vector<int>{1, 2, 5});
    const auto c6 = jaco_competition_closed_form(6);
    CHECK(c6.graph.edges() == std::vector<Edge>{{3, 4}, {4, 5}});
    CHECK(c6.isolated == std::vector<int>{1, 2, 6});
}

TEST_CASE("small Jaco graphs compete with nobody") {
    for (int n = 1; n <= 4; ++n) CHECK(competition_graph(build_jaco(n).digraph).graph.size() == 0);
}

TEST_CASE("direct competition graph matches pair scan") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 7));
        const auto web = random_connected_web(rng, n, n * (n - 1) / 2);
        oracle::ArcList arcs;
        for (const auto& a : web.digraph().arcs()) arcs.emplace_back(a.tail, a.head);
        std::vector<Edge> expected;
        for (auto [u, w] : oracle::competition_edges(n, arcs)) expected.push_back({u, w});
        CHECK(competition_graph(web.digraph()).graph.edges() == expected);
    }
}

TEST_CASE("closed form equals direct computation") {
    for (int n = 5; n <= 60; ++n) {
        const auto direct = competition_graph(build_jaco(n).digraph);
        CHECK(jaco_competition_closed_form(n) == direct);
    }
    for (const auto& row : check_jaco_competition(40)) CHECK(row.equal);
    CHECK_THROWS_AS(jaco_competition_closed_form(4), Error);
    CHECK_THROWS_AS(check_jaco_competition(4), Error);
}
