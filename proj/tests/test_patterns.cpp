#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turanx/constructions.hpp"
#include "turanx/graph6.hpp"
#include "turanx/patterns.hpp"

using namespace turanx;

TEST_CASE("pattern parsing") {
    ForbiddenPattern p = parse_pattern("2C5");
    CHECK(p.multiplicity == 2);
    CHECK(p.base == cycle(5));
    CHECK(p.label == "2C5");

    CHECK(parse_pattern("K3").base == complete(3));
    CHECK(parse_pattern("K3").multiplicity == 1);
    CHECK(parse_pattern("3K4").multiplicity == 3);
    CHECK(parse_pattern("2P4").base == path(4));
    CHECK(parse_pattern("2g6:Dhc").base == cycle(5));
    CHECK(parse_pattern("2*g6:Dhc").base == cycle(5)); // tolerated spelling
    CHECK(parse_pattern("P1").base.order() == 1);

    CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("C2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("K0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("0K3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("X5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("K17"), std::invalid_argument); // base order cap
}

TEST_CASE("contains_subgraph basics") {
    CHECK(contains_subgraph(complete(4), cycle(4)).has_value());
    CHECK_FALSE(contains_subgraph(turan_graph({10, 2}), complete(3)).has_value());
    // The join vertex plus a 4-path inside the bipartite part closes a C_5.
    CHECK(contains_subgraph(join(complete(1), turan_graph({8, 2})), cycle(5)).has_value());
    // Non-induced semantics: a complete graph contains every cycle.
    CHECK(contains_subgraph(complete(5), cycle(5)).has_value());
    // Pattern larger than host is absent.
    CHECK_FALSE(contains_subgraph(complete(3), cycle(4)).has_value());
}

TEST_CASE("witnesses are valid and mask-minimal") {
    Graph host = disjoint_union(Graph(3), complete(3)); // triangle on {3,4,5}
    auto emb = contains_subgraph(host, complete(3));
    REQUIRE(emb.has_value());
    CHECK(emb->image_mask() == 0b111000u);
    CHECK(emb->map == std::vector<int>{3, 4, 5}); // least map within the image

    // A later-placed edge beats a lower-vertex spread pair on mask order.
    Graph h2(6, {{0, 5}, {1, 2}});
    auto e2 = contains_subgraph(h2, complete(2));
    REQUIRE(e2.has_value());
    CHECK(e2->image_mask() == 0b110u); // {1,2} = 6 < {0,5} = 33
}

TEST_CASE("find_disjoint_copies") {
    // 9 vertices cannot host two disjoint 5-cycles.
    CHECK_FALSE(find_disjoint_copies(complete(9), parse_pattern("2C5")).has_value());

    auto copies = find_disjoint_copies(disjoint_union(complete(3), complete(3)), parse_pattern("2K3"));
    REQUIRE(copies.has_value());
    CHECK(oracles::valid_witness(disjoint_union(complete(3), complete(3)), parse_pattern("2K3"), *copies));
    CHECK((*copies)[0].image_mask() < (*copies)[1].image_mask());

    // Oracle-checked: two disjoint triangles need six non-isolated vertices.
    Graph k5_plus_iso = disjoint_union(complete(5), Graph(1));
    CHECK_FALSE(oracles::has_disjoint_copies_by_tuples(k5_plus_iso, complete(3), 2));
    CHECK_FALSE(find_disjoint_copies(k5_plus_iso, parse_pattern("2K3")).has_value());

    auto k6 = find_disjoint_copies(complete(6), parse_pattern("2K3"));
    REQUIRE(k6.has_value());
    CHECK(oracles::valid_witness(complete(6), parse_pattern("2K3"), *k6));
    CHECK((*k6)[0].image_mask() == 0b000111u);
    CHECK((*k6)[1].image_mask() == 0b111000u);
}

TEST_CASE("is_free on the named constructions") {
    for (int n = 10; n <= 16; ++n) CHECK(is_free(thm_2c5_graph(n), parse_pattern("2C5")));
    for (int r = 3; r <= 4; ++r)
        for (int k = 1; k <= 2; ++k)
            for (int n = k + r - 1; n <= 12; ++n) {
                ForbiddenPattern p(complete(r), k + 1);
                CHECK(is_free(thm_kkr_graph(n, r, k), p));
            }
    CHECK_FALSE(is_free(complete(6), parse_pattern("2K3")));
}

TEST_CASE("pigeonhole freeness holds regardless of edges") {
    std::mt19937_64 rng(123);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = oracles::random_graph(n, 0.8, rng);
        ForbiddenPattern p(cycle(5), (n / 5) + 1); // multiplicity * 5 > n
        CHECK(is_free(g, p));
    }
}

TEST_CASE("edge monotonicity of containment") {
    std::mt19937_64 rng(321);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 4 + static_cast<int>(rng() % 6);
        Graph g = oracles::random_graph(n, 0.5, rng);
        ForbiddenPattern p = (iter % 2 == 0) ? parse_pattern("K3") : parse_pattern("P4");
        if (is_free(g, p)) continue;
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v || g.has_edge(u, v)) continue;
        CHECK_FALSE(is_free(g.add_edge(u, v), p));
    }
}

TEST_CASE("is_free agrees with the all-tuples oracle") {
    std::mt19937_64 rng(20240601);
    const ForbiddenPattern patterns[] = {parse_pattern("C5"), parse_pattern("2C5"), parse_pattern("K3"),
                                         parse_pattern("2K3"), parse_pattern("P4"), parse_pattern("2P4")};
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 9);
        double p = 0.25 + 0.15 * static_cast<double>(iter % 4);
        Graph g = oracles::random_graph(n, p, rng);
        for (const auto& pattern : patterns) {
            CAPTURE(pattern.label);
            CHECK(is_free(g, pattern) == oracles::is_free_by_tuples(g, pattern));
        }
    }
}

TEST_CASE("every produced witness passes the independent checker") {
    std::mt19937_64 rng(606);
    const ForbiddenPattern patterns[] = {parse_pattern("K3"), parse_pattern("2K2"), parse_pattern("P4"),
                                         parse_pattern("C4")};
    for (int iter = 0; iter < 60; ++iter) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = oracles::random_graph(n, 0.55, rng);
        for (const auto& pattern : patterns) {
            auto copies = find_disjoint_copies(g, pattern);
            if (copies) CHECK(oracles::valid_witness(g, pattern, *copies));
            CHECK(copies.has_value() != is_free(g, pattern));
        }
    }
}

TEST_CASE("cycle and path fast paths agree with generic containment") {
    std::mt19937_64 rng(909);
    CHECK(contains_cycle(cycle(5), 5));
    CHECK_FALSE(contains_cycle(turan_graph({6, 2}), 5)); // bipartite: no odd cycle
    CHECK(contains_cycle(complete(4), 4));
    CHECK(contains_path(path(2), 2));
    CHECK_THROWS_AS(contains_cycle(complete(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(contains_path(complete(4), 0), std::invalid_argument);

    for (int iter = 0; iter < 60; ++iter) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = oracles::random_graph(n, 0.4, rng);
        for (int len = 3; len <= std::min(n, 7); ++len) {
            CHECK(contains_cycle(g, len) == contains_subgraph(g, cycle(len)).has_value());
            CHECK(contains_path(g, len) == contains_subgraph(g, path(len)).has_value());
        }
    }
}
