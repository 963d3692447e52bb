#include <doctest.h>

#include "mce/errors.hpp"
#include "mce/generators.hpp"
#include "mce/oracle.hpp"

using namespace mce;

TEST_CASE("oracle: path of three") {
    CliqueList c = brute_force_cliques(build_graph({{0, 1}, {1, 2}}));
    CHECK(c == CliqueList{{0, 1}, {1, 2}});
}

TEST_CASE("oracle: four-cycle lists its edges") {
    CliqueList c = brute_force_cliques(named_small("cycle", 4));
    CHECK(c == CliqueList{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("oracle: K4 minus an edge gives two triangles") {
    Graph g = build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CliqueList c = brute_force_cliques(g);
    CHECK(c == CliqueList{{0, 1, 2}, {0, 1, 3}});
}

TEST_CASE("oracle: empty and edgeless graphs") {
    CHECK(brute_force_cliques(build_graph({})).empty());
    CliqueList c = brute_force_cliques(build_graph({}, 3));
    CHECK(c == CliqueList{{0}, {1}, {2}});
}

TEST_CASE("oracle: the two modes agree on random instances") {
    for (std::uint32_t n = 1; n <= 20; ++n) {
        for (double p : {0.15, 0.4, 0.75}) {
            Graph g = gnp(n, p, 1000 + n);
            CAPTURE(n);
            CAPTURE(p);
            CHECK(brute_force_cliques_subsets(g) == brute_force_cliques_pivotfree(g));
        }
    }
}

TEST_CASE("oracle: size limits") {
    CHECK_THROWS_AS(brute_force_cliques_subsets(build_graph({}, 33)), TooLarge);
    CHECK_THROWS_AS(brute_force_cliques_pivotfree(build_graph({}, 201)), TooLarge);
    CHECK_THROWS_AS(brute_force_cliques(build_graph({}, 201)), TooLarge);
}

TEST_CASE("pivot-free call count equals the clique count plus the root") {
    // every clique (including the empty root) is one call
    Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}}); // triangle: 1+3+3+1 cliques
    EnumStats stats;
    brute_force_cliques_pivotfree(g, &stats);
    CHECK(stats.recursive_calls == 8);
}

TEST_CASE("canonicalize sorts members and the list") {
    CliqueList input = {{2, 1}, {0}};
    CHECK(canonicalize(std::move(input)) == CliqueList{{0}, {1, 2}});
    CHECK(canonicalize({}).empty());
}

TEST_CASE("canonicalize rejects duplicates") {
    CliqueList input = {{1, 2}, {2, 1}};
    CHECK_THROWS_AS(canonicalize(std::move(input)), DuplicateClique);
}
