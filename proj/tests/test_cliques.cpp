#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turanx/cliques.hpp"
#include "turanx/constructions.hpp"

using namespace turanx;

TEST_CASE("complete graphs: every s-subset is a clique") {
    for (int n : {0, 1, 4, 9, 30, 64}) {
        Graph g = complete(n);
        for (int s = 0; s <= std::min(n, 9); ++s) CHECK(count_cliques(g, s) == binomial(n, s));
    }
    // deep entries of a large complete graph must not enumerate
    CHECK(count_cliques(complete(64), 32) == binomial(64, 32));
}

TEST_CASE("triangle counts of named graphs") {
    CHECK(count_cliques(cycle(5), 3) == 0);
    // Oracle-computed: all 20 triples of the balanced tripartite graph on 6
    // vertices yield 8 triangles.
    Graph t36 = turan_graph({6, 3});
    CHECK(oracles::count_cliques_by_subsets(t36, 3) == 8);
    CHECK(count_cliques(t36, 3) == 8);
    CHECK(oracles::count_cliques_by_subsets(oracles::petersen(), 3) == 0);
    CHECK(count_cliques(oracles::petersen(), 3) == 0);
    CHECK(count_cliques(complete(5), 3) == 10);
    CHECK(count_cliques(turan_graph({7, 3}), 3) == 12);
}

TEST_CASE("clique profiles") {
    auto profile = clique_profile(Graph(4));
    REQUIRE(profile.counts.size() == 5);
    CHECK(profile.counts[0] == 1);
    CHECK(profile.counts[1] == 4);
    CHECK(profile.counts[2] == 0);
    CHECK(profile.counts[3] == 0);
    CHECK(profile.counts[4] == 0);

    auto k4 = clique_profile(complete(4));
    CHECK(k4.counts == std::vector<Count>{1, 4, 6, 4, 1});

    auto c5 = clique_profile(cycle(5));
    CHECK(c5.counts == std::vector<Count>{1, 5, 5, 0, 0, 0});
}

TEST_CASE("count_cliques agrees with the subset oracle at n <= 8") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 8);
        double p = 0.2 + 0.15 * static_cast<double>(iter % 5);
        Graph g = oracles::random_graph(n, p, rng);
        for (int s = 0; s <= n; ++s) CHECK(count_cliques(g, s) == oracles::count_cliques_by_subsets(g, s));
    }
}

TEST_CASE("triangles through a vertex") {
    for (int v = 0; v < 4; ++v) CHECK(triangles_through_vertex(complete(4), v) == 3);
    for (int v = 0; v < 5; ++v) CHECK(triangles_through_vertex(cycle(5), v) == 0);
    Graph wheel = join(complete(1), cycle(5));
    CHECK(triangles_through_vertex(wheel, 0) == 5); // hub neighborhood induces C_5
    CHECK_THROWS_AS(triangles_through_vertex(wheel, 6), std::out_of_range);
}

TEST_CASE("triangle handshake: sum over vertices = 3 * K_3") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = oracles::random_graph(n, 0.45, rng);
        Count total = 0;
        for (int v = 0; v < g.order(); ++v) total += triangles_through_vertex(g, v);
        CHECK(total == 3 * count_cliques(g, 3));
    }
}

TEST_CASE("vertex-deletion triangle bound holds universally") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 10);
        Graph g = oracles::random_graph(n, 0.5, rng);
        for (int v = 0; v < n; ++v) {
            Graph h = g.delete_vertex(v);
            CHECK(count_cliques(g, 3) <=
                  static_cast<Count>(h.edge_count()) + count_cliques(h, 3));
        }
    }
}

TEST_CASE("profile entries never decrease when an edge is added") {
    std::mt19937_64 rng(888);
    for (int iter = 0; iter < 80; ++iter) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = oracles::random_graph(n, 0.4, rng);
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v || g.has_edge(u, v)) continue;
        Graph h = g.add_edge(u, v);
        auto pg = clique_profile(g);
        auto ph = clique_profile(h);
        for (std::size_t s = 0; s < pg.counts.size(); ++s) CHECK(pg.counts[s] <= ph.counts[s]);
    }
}

TEST_CASE("max clique order") {
    CHECK(max_clique_order(complete(7)) == 7);
    CHECK(max_clique_order(turan_graph({8, 2})) == 2);
    CHECK(max_clique_order(disjoint_union(complete(5), Graph(1))) == 5);
    CHECK(max_clique_order(Graph(0)) == 0);
    CHECK(max_clique_order(Graph(3)) == 1);
    CHECK(max_clique_order(complete(64)) == 64);
}

TEST_CASE("count_cliques domain") {
    CHECK(count_cliques(complete(3), 7) == 0);
    CHECK_THROWS_AS(count_cliques(complete(3), -1), std::invalid_argument);
    CHECK_THROWS_AS(count_cliques(complete(3), 65), std::invalid_argument);
}
