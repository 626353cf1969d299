#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "turanx/canonical.hpp"
#include "turanx/constructions.hpp"
#include "turanx/graph.hpp"
#include "turanx/graph6.hpp"

using namespace turanx;

TEST_CASE("graph invariants and basic accessors") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(g.valid());
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.degree(0) == 2);
    CHECK(g.neighbors(0) == ((1ull << 1) | (1ull << 4)));
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 2));

    Graph h = g.add_edge(0, 2);
    CHECK(h.edge_count() == 6);
    CHECK(g.edge_count() == 5); // immutable value semantics
    CHECK(h.remove_edge(0, 2) == g);

    CHECK_THROWS_AS(g.has_edge(0, 5), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("edge_count of complete graphs up to the 64 cap") {
    for (int n : {0, 1, 2, 5, 31, 63, 64}) {
        CHECK(complete(n).edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("delete_vertex") {
    CHECK(is_isomorphic(complete(5).delete_vertex(2), complete(4)));
    for (int v = 0; v < 5; ++v) CHECK(is_isomorphic(cycle(5).delete_vertex(v), path(4)));
    Graph s = star(6); // 6 vertices, center 0
    CHECK(s.delete_vertex(0) == Graph(5));
    CHECK(s.delete_vertex(3).edge_count() == 4);
    CHECK_THROWS_AS(s.delete_vertex(6), std::out_of_range);
}

TEST_CASE("graph6 frozen encodings") {
    // Derived by hand from the format definition: K_5 packs ten 1-bits into
    // "111111" "111100", i.e. '~' '{' after the order byte 'D'.
    CHECK(to_graph6(complete(5)) == "D~{");
    CHECK(from_graph6("D~{") == complete(5));

    // C_5 edges (01,12,23,34,40) give bits 1 01 001 1001 -> "Dhc".
    CHECK(to_graph6(cycle(5)) == "Dhc");
    CHECK(from_graph6("Dhc") == cycle(5));

    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(from_graph6("?") == Graph(0));
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(from_graph6("@") == Graph(1));
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(from_graph6(""), Graph6ParseError);
    CHECK_THROWS_AS(from_graph6("D~"), Graph6ParseError);   // truncated
    CHECK_THROWS_AS(from_graph6("D~{?"), Graph6ParseError); // trailing byte
    CHECK_THROWS_AS(from_graph6("D~\x1f"), Graph6ParseError);
    try {
        from_graph6("D\x20\x20");
        CHECK(false);
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset() == 1);
    }
    // order 65 in long form must be refused
    CHECK_THROWS_AS(from_graph6(std::string("~??") + static_cast<char>(65 + 63)), Graph6ParseError);
    // long form used for a short-form order is non-canonical
    CHECK_THROWS_AS(from_graph6("~??G"), Graph6ParseError);
    // nonzero padding bits
    CHECK_THROWS_AS(from_graph6("B@"), Graph6ParseError);
}

TEST_CASE("graph6 round trip on random graphs, including orders 63 and 64") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        int n = static_cast<int>(rng() % 13);
        Graph g = oracles::random_graph(n, 0.4, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    for (int n : {62, 63, 64}) {
        Graph g = oracles::random_graph(n, 0.3, rng);
        std::string text = to_graph6(g);
        if (n <= 62) CHECK(text.size() == 1 + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6));
        else CHECK(text.size() == 4 + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6));
        CHECK(from_graph6(text) == g);
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = oracles::random_graph(n, 0.5, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v))
                    h = h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("canonical form agrees with the permutation oracle at n <= 7") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 250; ++iter) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = oracles::random_graph(n, 0.5, rng);
        Graph h = oracles::random_graph(n, 0.5, rng);
        bool iso = oracles::isomorphic_by_permutation(g, h);
        CHECK((canonical_form(g) == canonical_form(h)) == iso);
        CHECK(is_isomorphic(g, h) == iso);
    }
}

TEST_CASE("canonical representative is isomorphic to the input") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = oracles::random_graph(n, 0.4, rng);
        Graph rep = canonical_form(g).to_graph();
        CHECK(oracles::isomorphic_by_permutation(g, rep));
        CHECK(canonical_form(rep) == canonical_form(g));
    }
}

TEST_CASE("all 11 graphs on 4 vertices have distinct canonical forms") {
    // Oracle: dedup all 2^6 labeled graphs by permutation-isomorphism.
    std::vector<Graph> reps;
    oracles::for_each_labeled_graph(4, [&](const Graph& g) {
        for (const Graph& r : reps)
            if (oracles::isomorphic_by_permutation(g, r)) return;
        reps.push_back(g);
    });
    REQUIRE(reps.size() == 11);
    std::set<CanonicalForm> forms;
    for (const Graph& r : reps) forms.insert(canonical_form(r));
    CHECK(forms.size() == 11);
}

TEST_CASE("canonical form handles highly symmetric graphs at full order") {
    CHECK(canonical_form(complete(64)) == canonical_form(complete(64)));
    CHECK(canonical_form(turan_graph({20, 2})).order() == 20);
    // Two labelings of the same Turan graph.
    Graph a = turan_graph({16, 4});
    Graph b(16);
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v)
            if (u / 4 != v / 4) b = b.add_edge(u, v); // contiguous parts instead of mod parts
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(is_isomorphic(complete(30), complete(30)));
}

TEST_CASE("P4 and K_{1,3} get distinct forms") {
    CHECK(canonical_form(path(4)) != canonical_form(star(4)));
}

TEST_CASE("delete_vertex commutes with relabeling under canonical forms") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = oracles::random_graph(n, 0.5, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v))
                    h = h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        CHECK(canonical_form(g.delete_vertex(v)) ==
              canonical_form(h.delete_vertex(perm[static_cast<std::size_t>(v)])));
    }
}
