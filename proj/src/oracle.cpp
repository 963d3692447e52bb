#include "mce/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "mce/errors.hpp"

namespace mce {

CliqueList brute_force_cliques_subsets(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n > 32) throw TooLarge("subset oracle limited to 32 vertices");

    std::vector<std::uint32_t> adj_mask(n, 0);
    for (vertex_t v = 0; v < n; ++v)
        for (vertex_t w : g.neighbors(v)) adj_mask[v] |= std::uint32_t(1) << w;

    CliqueList out;
    const std::uint64_t limit = n == 0 ? 1 : (std::uint64_t(1) << n);
    for (std::uint64_t subset = 1; subset < limit; ++subset) {
        auto s = std::uint32_t(subset);
        std::uint32_t common = ~std::uint32_t(0);
        bool clique = true;
        for (std::uint32_t rest = s; rest != 0 && clique;) {
            auto v = vertex_t(std::countr_zero(rest));
            rest &= rest - 1;
            clique = (s & ~(std::uint32_t(1) << v) & ~adj_mask[v]) == 0;
            common &= adj_mask[v];
        }
        if (!clique) continue;
        // s is nonempty, so common is already confined to real vertices.
        if ((common & ~s) != 0) continue; // extendable, not maximal
        std::vector<vertex_t> clique_vertices;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1)
            clique_vertices.push_back(vertex_t(std::countr_zero(rest)));
        out.push_back(std::move(clique_vertices));
    }
    return canonicalize(std::move(out));
}

namespace {

// Figure-one recursion with the pivot lines removed: every vertex of P
// branches, so the call tree visits each clique of the graph exactly once.
struct PivotFreeRun {
    const Graph& g;
    CliqueList& out;
    EnumStats stats;
    std::vector<vertex_t> r;

    void expand(std::vector<vertex_t>& p, std::vector<vertex_t>& x, std::uint32_t depth) {
        ++stats.recursive_calls;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (p.empty()) {
            if (x.empty() && !r.empty()) out.push_back(r);
            return;
        }
        std::vector<vertex_t> candidates = p;
        for (vertex_t v : candidates) {
            std::vector<vertex_t> next_p, next_x;
            for (vertex_t w : p)
                if (g.has_edge(v, w)) next_p.push_back(w);
            for (vertex_t w : x)
                if (g.has_edge(v, w)) next_x.push_back(w);
            r.push_back(v);
            expand(next_p, next_x, depth + 1);
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }
};

} // namespace

CliqueList brute_force_cliques_pivotfree(const Graph& g, EnumStats* stats) {
    if (g.vertex_count() > 200) throw TooLarge("pivot-free oracle limited to 200 vertices");
    CliqueList out;
    PivotFreeRun run{g, out, {}, {}};
    std::vector<vertex_t> p(g.vertex_count());
    for (vertex_t v = 0; v < g.vertex_count(); ++v) p[v] = v;
    std::vector<vertex_t> x;
    run.expand(p, x, 1);
    if (stats) *stats = run.stats;
    return canonicalize(std::move(out));
}

CliqueList brute_force_cliques(const Graph& g) {
    if (g.vertex_count() <= 32) return brute_force_cliques_subsets(g);
    return brute_force_cliques_pivotfree(g);
}

CliqueList canonicalize(CliqueList cliques) {
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    std::sort(cliques.begin(), cliques.end());
    for (std::size_t i = 1; i < cliques.size(); ++i)
        if (cliques[i] == cliques[i - 1])
            throw DuplicateClique("clique reported twice");
    return cliques;
}

} // namespace mce
