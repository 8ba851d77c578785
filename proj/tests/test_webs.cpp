#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "jgrog/error.hpp"
#include "jgrog/webs.hpp"
#include "oracles.hpp"

using namespace jgrog;

namespace {

oracle::ArcList edge_pairs(const UGraph& g) {
    oracle::ArcList out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

oracle::ArcList arc_pairs(const Digraph& d) {
    oracle::ArcList out;
    for (const auto& a : d.arcs()) out.emplace_back(a.tail, a.head);
    return out;
}

}  // namespace

TEST_CASE("base graph families") {
    CHECK(path_graph(4).edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(cycle_graph(3).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(star_graph(4).degrees() == std::vector<int>{0, 3, 1, 1, 1});
    CHECK(complete_graph(4).size() == 6);
    CHECK_THROWS_AS(path_graph(1), Error);
    CHECK_THROWS_AS(cycle_graph(2), Error);
}

TEST_CASE("automorphism group sizes") {
    CHECK(automorphisms(path_graph(3)).size() == 2);
    CHECK(automorphisms(path_graph(5)).size() == 2);
    CHECK(automorphisms(cycle_graph(5)).size() == 10);
    CHECK(automorphisms(star_graph(4)).size() == 6);
    CHECK(automorphisms(complete_graph(4)).size() == 24);
    CHECK(automorphisms(path_graph(4)).front().labels == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("full enumeration lists every labelling and orientation") {
    const auto webs = enumerate_webs(path_graph(3), {});
    CHECK(webs.size() == 24);
    CHECK(webs.front().labels.labels == std::vector<int>{1, 2, 3});
    CHECK(webs.front().orientation == 0);
    CHECK(webs[1].orientation == 1);
    CHECK(webs[3].orientation == 3);
    CHECK(webs[4].labels.labels == std::vector<int>{1, 3, 2});
    CHECK(webs[4].orientation == 0);
}

TEST_CASE("dedup equals distinct labelled digraphs") {
    for (const auto& g : {path_graph(3), path_graph(4), cycle_graph(3), cycle_graph(4),
                          star_graph(4), complete_graph(4), path_graph(5)}) {
        const auto expected = oracle::labelled_webs(g.order(), edge_pairs(g));
        std::set<oracle::ArcList> got;
        std::uint64_t count = 0;
        for_each_web(g, {.dedup = true}, [&](const EnumeratedWeb& w) {
            ++count;
            got.insert(arc_pairs(w.web.digraph()));
        });
        CHECK(count == expected.size());
        CHECK(got == expected);
    }
}

TEST_CASE("web count formula") {
    CHECK(web_count_formula(3, 2) == 12);
    CHECK(web_count_formula(4, 3) == 96);
    CHECK(enumerate_webs(path_graph(3), {.dedup = true}).size() == web_count_formula(3, 2));
    CHECK(enumerate_webs(path_graph(4), {.dedup = true}).size() == web_count_formula(4, 3));
    CHECK_THROWS_AS(web_count_formula(20, 10), Error);
}

TEST_CASE("enumeration caps and domain") {
    CHECK_THROWS_AS(enumerate_webs(path_graph(9), {}), Error);
    CHECK_THROWS_AS(enumerate_webs(complete_graph(6), {}), Error);
    CHECK_THROWS_AS(enumerate_webs(make_ugraph(3, std::vector<Edge>{{1, 2}}), {}), Error);
}

TEST_CASE("Example 1 distribution on P_3") {
    const auto dist = residual_distribution(path_graph(3));
    CHECK(dist == std::map<long long, std::uint64_t>{{2, 8}, {4, 4}});
    const auto g = grog_number(path_graph(3));
    CHECK(g.grog == 2);
    CHECK(run_strategy(g.web.web, g.witness).residual == 2);
}

TEST_CASE("graph grog numbers") {
    const std::vector<long long> paths = {2, 4, 7, 11};
    for (int n = 3; n <= 6; ++n) CHECK(grog_number(path_graph(n)).grog == paths[n - 3]);
    CHECK(grog_number(cycle_graph(3)).grog == 2);
    CHECK(grog_number(cycle_graph(4)).grog == 4);
}

TEST_CASE("survey min and max") {
    const auto s = survey_webs(path_graph(3), {.dedup = true});
    CHECK(s.webs == 12);
    CHECK(s.min_grog == 2);
    CHECK(s.max_grog == 4);
    CHECK(solve_exact(s.max_web.web).grog == 4);
    CHECK(solve_exact(s.min_web.web).grog == 2);
}

TEST_CASE("random connected webs") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 7));
        const int cap = n - 1 + static_cast<int>(uniform_below(rng, n));
        const auto w = random_connected_web(rng, n, cap);
        CHECK(w.order() == n);
        CHECK(is_connected(underlying(w.digraph())));
        CHECK(w.digraph().size() >= static_cast<std::size_t>(n - 1));
        CHECK(w.digraph().size() <= static_cast<std::size_t>(std::max(cap, n - 1)));
    }
    std::mt19937_64 a(4), b(4);
    CHECK(random_connected_web(a, 6, 10) == random_connected_web(b, 6, 10));
}
