#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "mce/enumerate.hpp"
#include "mce/generators.hpp"
#include "mce/io.hpp"
#include "mce/oracle.hpp"
#include "test_support.hpp"

using namespace mce;

namespace {

using Enumerator = EnumStats (*)(const Graph&, CliqueSink&);

EnumStats run_tomita(const Graph& g, CliqueSink& sink) { return enumerate_tomita(g, sink); }

const std::vector<std::pair<const char*, Enumerator>> kVariants = {
    {"tomita", run_tomita},
    {"maxdegree", enumerate_maxdegree},
    {"hybrid", enumerate_hybrid},
    {"degen", enumerate_degen},
};

CliqueList collect_canonical(Enumerator e, const Graph& g) {
    CliqueSink sink = CliqueSink::collect();
    e(g, sink);
    return canonicalize(sink.cliques());
}

} // namespace

TEST_CASE("triangle has one maximal clique in every variant") {
    Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}});
    for (const auto& [name, e] : kVariants) {
        CAPTURE(name);
        CliqueList c = collect_canonical(e, g);
        REQUIRE(c.size() == 1);
        CHECK(c[0] == std::vector<vertex_t>{0, 1, 2});
    }
}

TEST_CASE("isolated vertices are maximal singleton cliques") {
    Graph g = build_graph({}, 4);
    for (const auto& [name, e] : kVariants) {
        CAPTURE(name);
        CliqueList c = collect_canonical(e, g);
        REQUIRE(c.size() == 4);
        CHECK(c[0] == std::vector<vertex_t>{0});
        CHECK(c[3] == std::vector<vertex_t>{3});
    }
}

TEST_CASE("empty graph has no maximal cliques") {
    Graph g = build_graph({});
    for (const auto& [name, e] : kVariants) {
        CAPTURE(name);
        CliqueSink sink = CliqueSink::count_only();
        e(g, sink);
        CHECK(sink.count() == 0);
    }
}

TEST_CASE("path of three: two edges as cliques") {
    Graph g = build_graph({{0, 1}, {1, 2}});
    CliqueList expected = {{0, 1}, {1, 2}};
    for (const auto& [name, e] : kVariants) {
        CAPTURE(name);
        CHECK(collect_canonical(e, g) == expected);
    }
}

TEST_CASE("every variant counts 3^10 on the 30-vertex worst-case graph") {
    Graph g = moon_moser(10);
    for (const auto& [name, e] : kVariants) {
        CAPTURE(name);
        CliqueSink sink = CliqueSink::count_only();
        e(g, sink);
        CHECK(sink.count() == 59'049);
    }
}

TEST_CASE("count-only and collect report the same number") {
    Graph g = gnp(30, 0.4, 5);
    for (const auto& [name, e] : kVariants) {
        CAPTURE(name);
        CliqueSink counting = CliqueSink::count_only();
        CliqueSink collecting = CliqueSink::collect();
        e(g, counting);
        e(g, collecting);
        CHECK(counting.count() == collecting.count());
        CHECK(collecting.cliques().size() == collecting.count());
    }
}

TEST_CASE("random graph matches the brute-force oracle") {
    Graph g = gnp(15, 0.5, 42);
    CliqueList expected = brute_force_cliques(g);
    for (const auto& [name, e] : kVariants) {
        CAPTURE(name);
        CHECK(collect_canonical(e, g) == expected);
    }
}

TEST_CASE("streaming sink can cancel the enumeration") {
    Graph g = moon_moser(6); // 729 cliques
    for (const auto& [name, e] : kVariants) {
        CAPTURE(name);
        std::uint64_t seen = 0;
        CliqueSink sink = CliqueSink::stream([&](std::span<const vertex_t>) {
            ++seen;
            return seen < 10;
        });
        e(g, sink);
        CHECK(sink.count() == 10);
        CHECK(seen == 10);
    }
}

TEST_CASE("stats: depth is bounded by largest clique plus one") {
    Graph g = gnp(40, 0.3, 9);
    std::size_t largest = 0;
    for (const auto& c : collect_canonical(run_tomita, g))
        largest = std::max(largest, c.size());
    for (const auto& [name, e] : kVariants) {
        CAPTURE(name);
        CliqueSink sink = CliqueSink::count_only();
        EnumStats stats = e(g, sink);
        CHECK(stats.recursive_calls > 0);
        CHECK(stats.max_depth <= largest + 1);
    }
}

TEST_CASE("pivot: star center wins") {
    Graph g = named_small("star", 4);
    std::vector<vertex_t> p = {0, 1, 2, 3};
    CHECK(choose_pivot(g, p, {}) == 0);
}

TEST_CASE("pivot: singleton candidate set") {
    Graph g = named_small("star", 4);
    std::vector<vertex_t> p = {2};
    CHECK(choose_pivot(g, p, {}) == 2);
}

TEST_CASE("pivot: smallest id among tied counts") {
    // deg-in-P: 0 and 1 have two, 2 and 3 have one
    Graph g = build_graph({{0, 1}, {0, 2}, {1, 3}});
    std::vector<vertex_t> p = {0, 1, 2, 3};
    CHECK(choose_pivot(g, p, {}) == 0);

    // same counts presented in a different order must not change the answer
    std::vector<vertex_t> shuffled = {3, 1, 2, 0};
    CHECK(choose_pivot(g, shuffled, {}) == 0);
}

TEST_CASE("pivot candidates come from x as well") {
    // P = {1, 2}, X = {0}; 0 is adjacent to both P members and must win.
    Graph g = build_graph({{0, 1}, {0, 2}});
    std::vector<vertex_t> p = {1, 2};
    std::vector<vertex_t> x = {0};
    CHECK(choose_pivot(g, p, x) == 0);
}

TEST_CASE("karate club file, when vendored, matches the published row") {
    const char* path = "data/zachary.edges";
    if (!std::filesystem::exists(path)) {
        MESSAGE("data/zachary.edges not vendored; skipping");
        return;
    }
    Graph g = read_graph_file(path, GraphFormat::EdgeList);
    CHECK(g.vertex_count() == 34);
    CHECK(g.edge_count() == 78);
    CliqueSink sink = CliqueSink::count_only();
    enumerate_hybrid(g, sink);
    CHECK(sink.count() == 39);
}
