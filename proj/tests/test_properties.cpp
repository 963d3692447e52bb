#include <doctest.h>

#include <random>
#include <vector>

#include "mce/degeneracy.hpp"
#include "mce/enumerate.hpp"
#include "mce/generators.hpp"
#include "mce/oracle.hpp"

using namespace mce;

namespace {

bool is_clique(const Graph& g, const std::vector<vertex_t>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!g.has_edge(c[i], c[j])) return false;
    return true;
}

bool is_maximal(const Graph& g, const std::vector<vertex_t>& c) {
    for (vertex_t w = 0; w < g.vertex_count(); ++w) {
        bool inside = false;
        for (vertex_t v : c) inside |= (v == w);
        if (inside) continue;
        bool extends = true;
        for (vertex_t v : c)
            if (!g.has_edge(w, v)) {
                extends = false;
                break;
            }
        if (extends) return false;
    }
    return true;
}

std::vector<Graph> property_instances() {
    std::vector<Graph> gs;
    for (std::uint64_t seed : {1, 2, 3, 4}) {
        gs.push_back(gnp(18, 0.35, seed));
        gs.push_back(gnp(40, 0.2, seed));
    }
    gs.push_back(gnp(60, 0.08, 50));
    gs.push_back(moon_moser(5));
    gs.push_back(named_small("star", 12));
    gs.push_back(named_small("cycle", 9));
    gs.push_back(build_graph({}, 5));
    return gs;
}

} // namespace

TEST_CASE("soundness, maximality, uniqueness of every report") {
    for (const Graph& g : property_instances()) {
        CliqueSink sink = CliqueSink::collect();
        enumerate_degen(g, sink);
        CliqueList canonical = canonicalize(sink.cliques()); // throws on duplicates
        for (const auto& c : canonical) {
            CHECK(is_clique(g, c));
            CHECK(is_maximal(g, c));
        }
    }
}

TEST_CASE("all four variants agree on midsize graphs") {
    std::vector<Graph> gs = property_instances();
    gs.push_back(gnp(150, 0.1, 8));
    gs.push_back(gnp(200, 0.05, 9));
    for (const Graph& g : gs) {
        CliqueSink a = CliqueSink::collect(), b = CliqueSink::collect(),
                   c = CliqueSink::collect(), d = CliqueSink::collect();
        enumerate_tomita(g, a);
        enumerate_maxdegree(g, b);
        enumerate_hybrid(g, c);
        enumerate_degen(g, d);
        CliqueList ca = canonicalize(a.cliques());
        CHECK(ca == canonicalize(b.cliques()));
        CHECK(ca == canonicalize(c.cliques()));
        CHECK(ca == canonicalize(d.cliques()));
    }
}

TEST_CASE("pivoting never makes more calls than the pivot-free recursion") {
    for (const Graph& g : property_instances()) {
        EnumStats free_stats;
        brute_force_cliques_pivotfree(g, &free_stats);

        CliqueSink s1 = CliqueSink::count_only(), s2 = CliqueSink::count_only(),
                   s3 = CliqueSink::count_only(), s4 = CliqueSink::count_only();
        CHECK(enumerate_tomita(g, s1).recursive_calls <= free_stats.recursive_calls);
        CHECK(enumerate_maxdegree(g, s2).recursive_calls <= free_stats.recursive_calls);
        CHECK(enumerate_hybrid(g, s3).recursive_calls <= free_stats.recursive_calls);
        CHECK(enumerate_degen(g, s4).recursive_calls <= free_stats.recursive_calls);
    }
}

TEST_CASE("degeneracy-ordered variants respect the depth bound") {
    for (const Graph& g : property_instances()) {
        DegeneracyOrder ord = degeneracy_ordering(g);
        CHECK(validate_ordering(g, ord));
        // every top-level subproblem has at most d candidates
        for (vertex_t v = 0; v < g.vertex_count(); ++v)
            CHECK(ord.later_neighbors(v).size() <= ord.degeneracy);

        CliqueSink s1 = CliqueSink::count_only(), s2 = CliqueSink::count_only();
        CHECK(enumerate_hybrid(g, s1).max_depth <= ord.degeneracy + 2);
        CHECK(enumerate_degen(g, s2).max_depth <= ord.degeneracy + 2);
    }
}

TEST_CASE("degen self-check: window restoration and prefix lengths hold") {
    for (const Graph& g : property_instances()) {
        CliqueSink checked = CliqueSink::count_only();
        CliqueSink plain = CliqueSink::count_only();
        EnumStats cs = mce::testing::enumerate_degen_selfcheck(g, checked);
        EnumStats ps = enumerate_degen(g, plain);
        CHECK(checked.count() == plain.count());
        CHECK(cs.recursive_calls == ps.recursive_calls);
    }
}

TEST_CASE("randomized stress: selfcheck, hybrid, tomita and oracle agree") {
    std::mt19937_64 rng(987);
    for (int iter = 0; iter < 250; ++iter) {
        std::uint32_t n = 1 + rng() % 60;
        double pmax = n <= 20 ? 1.0 : (n <= 40 ? 0.6 : 0.3);
        double p = pmax * double(rng() % 101) / 100.0;
        Graph g = gnp(n, p, rng());
        if (iter % 7 == 0) { // graft a pendant star and an isolated block
            auto edges = g.edge_list();
            for (std::uint32_t i = 1; i <= 5; ++i) edges.emplace_back(n, n + i);
            g = build_graph(edges, n + 10);
        }
        CAPTURE(iter);
        CliqueSink a = CliqueSink::collect(), b = CliqueSink::collect(),
                   c = CliqueSink::collect();
        mce::testing::enumerate_degen_selfcheck(g, a);
        enumerate_hybrid(g, b);
        enumerate_tomita(g, c);
        CliqueList canonical = canonicalize(a.cliques());
        REQUIRE(canonical == canonicalize(b.cliques()));
        REQUIRE(canonical == canonicalize(c.cliques()));
        if (g.vertex_count() <= 24)
            REQUIRE(canonical == brute_force_cliques_subsets(g));
    }
}

TEST_CASE("degen auxiliary space stays linear") {
    for (const Graph& g : property_instances()) {
        CliqueSink sink = CliqueSink::count_only();
        EnumStats stats = enumerate_degen(g, sink);
        std::uint64_t budget =
            kDegenAuxSlotConstant * (g.vertex_count() + g.edge_count()) + 64;
        CHECK(stats.aux_slots_peak > 0);
        CHECK(stats.aux_slots_peak <= budget);
    }
}
