#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oneplanar/generate.hpp"
#include "oneplanar/graph.hpp"

using namespace oneplanar;

TEST_CASE("graph basics and equality") {
    Graph g(4, {{0, 1}, {2, 1}, {3, 0}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    Graph h(4, {{3, 0}, {0, 1}, {1, 2}});
    CHECK(g == h);  // edge-set order independent
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("two_core of a tree is empty, with n records") {
    for (uint32_t seed : {1u, 2u, 3u}) {
        Graph t = make_random_tree(12, seed);
        auto [core, plan] = two_core(t);
        CHECK(core.vertex_count() == 0);
        CHECK(plan.records.size() == 12);
        CHECK(replay_plan(plan, core) == t);
    }
}

TEST_CASE("two_core keeps a triangle with a pendant") {
    Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto [core, plan] = two_core(g);
    CHECK(core == make_complete(3));
    CHECK(plan.records.size() == 1);
    CHECK(replay_plan(plan, core) == g);
}

TEST_CASE("two_core of K4 is K4 and idempotent") {
    auto [core, plan] = two_core(make_complete(4));
    CHECK(core == make_complete(4));
    CHECK(plan.records.empty());
    auto [core2, plan2] = two_core(core);
    CHECK(core2 == core);
}

TEST_CASE("two_core is a subgraph and replay is exact") {
    for (uint32_t seed = 0; seed < 10; ++seed) {
        Graph g = make_random_gnm(10, 12, seed);
        auto [core, plan] = two_core(g);
        for (int v = 0; v < core.vertex_count(); ++v) CHECK(core.degree(v) >= 2);
        CHECK(replay_plan(plan, core) == g);
        CHECK(core.edge_count() <= g.edge_count());
    }
}

TEST_CASE("blocks of two triangles sharing a vertex") {
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto bs = blocks(g);
    REQUIRE(bs.size() == 2);
    CHECK(bs[0].graph.vertex_count() == 3);
    CHECK(bs[1].graph.vertex_count() == 3);
}

TEST_CASE("blocks of a path are single edges") {
    auto bs = blocks(make_path(4));
    REQUIRE(bs.size() == 3);
    for (const auto& b : bs) CHECK(b.graph.edge_count() == 1);
}

TEST_CASE("K4 is a single block") {
    CHECK(blocks(make_complete(4)).size() == 1);
}

TEST_CASE("blocks partition the edge set") {
    for (uint32_t seed = 0; seed < 20; ++seed) {
        Graph g = make_random_gnm(9, 11, seed);
        auto bs = blocks(g);
        int total = 0;
        for (const auto& b : bs) total += b.graph.edge_count();
        CHECK(total == g.edge_count());
    }
}

TEST_CASE("cyclomatic number") {
    CHECK(cyclomatic_number(make_random_tree(20, 5)) == 0);
    CHECK(cyclomatic_number(make_complete(4)) == 3);
    Graph two_tris(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(cyclomatic_number(two_tris) == 2);
}

TEST_CASE("maximal degree-two paths of a theta graph") {
    Graph theta = make_theta(3, 2);
    auto pd = maximal_degree_two_paths(theta);
    REQUIRE(pd.paths.size() == 3);
    for (const auto& p : pd.paths) CHECK(p.interior.size() == 1);
    CHECK(pd.pure_cycles.empty());
}

TEST_CASE("K4 decomposes into 6 bare paths, matching 3k-3 at k=3") {
    auto pd = maximal_degree_two_paths(make_complete(4));
    CHECK(pd.paths.size() == 6);
    for (const auto& p : pd.paths) CHECK(p.interior.empty());
}

TEST_CASE("C5 is one pure cycle") {
    auto pd = maximal_degree_two_paths(make_cycle(5));
    CHECK(pd.paths.empty());
    REQUIRE(pd.pure_cycles.size() == 1);
    CHECK(pd.pure_cycles[0].size() == 5);
}

TEST_CASE("degree-one vertices are rejected") {
    CHECK_THROWS_AS(maximal_degree_two_paths(make_path(3)), std::invalid_argument);
}

TEST_CASE("path decomposition covers every edge exactly once") {
    for (uint32_t seed = 0; seed < 30; ++seed) {
        Graph g = make_random_with_cyclomatic(18, 4, seed);
        auto [core, plan] = two_core(g);
        if (core.vertex_count() == 0) continue;
        auto pd = maximal_degree_two_paths(core);
        size_t covered = 0;
        for (const auto& p : pd.paths) covered += p.interior.size() + 1;
        for (const auto& c : pd.pure_cycles) covered += c.size();
        CHECK(covered == static_cast<size_t>(core.edge_count()));
    }
}

TEST_CASE("degree-two path counts are bounded by the cyclomatic number") {
    auto check_bounds = [](const Graph& core) {
        int k = cyclomatic_number(core);
        if (k < 1 || core.vertex_count() == 0) return;
        int high = 0;
        for (int v = 0; v < core.vertex_count(); ++v)
            if (core.degree(v) > 2) ++high;
        CHECK(high <= 2 * k - 2);
        auto pd = maximal_degree_two_paths(core);
        CHECK(static_cast<int>(pd.paths.size()) <= 3 * k - 3);
    };
    for (uint32_t seed = 0; seed < 40; ++seed)
        check_bounds(two_core(make_random_with_cyclomatic(20, 2 + seed % 5, seed)).first);
    for (int k = 3; k <= 8; ++k) check_bounds(make_cubic_halin(k));
    check_bounds(make_complete(4));
    check_bounds(make_theta(4, 3));
}

TEST_CASE("cubic Halin generator attains the extremal path-count bounds") {
    for (int k = 3; k <= 7; ++k) {
        Graph g = make_cubic_halin(k);
        CHECK(g.vertex_count() == 2 * k - 2);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
        CHECK(cyclomatic_number(g) == k);
    }
    CHECK(make_cubic_halin(3) == make_complete(4));
}

TEST_CASE("complete bipartite 1-planarity table") {
    CHECK(complete_bipartite_one_planar(2, 1000));
    CHECK_FALSE(complete_bipartite_one_planar(3, 7));
    CHECK(complete_bipartite_one_planar(3, 6));
    CHECK(complete_bipartite_one_planar(4, 4));
    CHECK_FALSE(complete_bipartite_one_planar(4, 5));
    CHECK_FALSE(complete_bipartite_one_planar(5, 5));
    // Symmetry and monotone decrease within each row.
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= 12; ++b) {
            CHECK(complete_bipartite_one_planar(a, b) ==
                  complete_bipartite_one_planar(b, a));
            if (b > 0)
                CHECK(complete_bipartite_one_planar(a, b) <=
                      complete_bipartite_one_planar(a, b - 1));
        }
}

TEST_CASE("generators: sizes") {
    CHECK(make_complete(5).edge_count() == 10);
    Graph theta = make_theta(3, 3);
    CHECK(theta.vertex_count() == 2 + 3 * 2);
    CHECK(make_cycle(5).edge_count() == 5);
    Graph r = make_random_with_cover(30, 3, 7);
    CHECK(r.vertex_count() == 30);
    CHECK(r == make_random_with_cover(30, 3, 7));  // deterministic
    Graph c = make_random_with_cyclomatic(25, 3, 11);
    CHECK(c.vertex_count() == 25);
    CHECK(cyclomatic_number(c) <= 3);
}

TEST_CASE("induced subgraph") {
    Graph g = make_complete(5);
    auto [sub, map] = induced_subgraph(g, {0, 2, 4});
    CHECK(sub == make_complete(3));
    CHECK(map == std::vector<int>{0, 2, 4});
}
