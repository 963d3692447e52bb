#include <algorithm>
#include <vector>

#include "mce/enumerate.hpp"

namespace mce {

namespace {

// Shared frame bookkeeping for the two list-based variants. Membership of a
// vertex in the current P or X is tracked by stamping the vertex with the
// owning call's epoch; a child restores its parent's stamps on exit, which
// is sound because a child's P (X) is always a subset of the parent's P (X)
// at call time.
struct ListRun {
    const Graph& g;
    CliqueSink& sink;
    EnumStats stats;
    std::vector<vertex_t> r;
    std::vector<std::uint64_t> p_epoch, x_epoch, mark_epoch;
    std::uint64_t epoch_counter = 0;
    bool stopped = false;

    explicit ListRun(const Graph& graph, CliqueSink& s)
        : g(graph), sink(s), p_epoch(graph.vertex_count(), 0),
          x_epoch(graph.vertex_count(), 0), mark_epoch(graph.vertex_count(), 0) {}

    bool in_p(vertex_t w, std::uint64_t e) const { return p_epoch[w] == e; }
    bool in_x(vertex_t w, std::uint64_t e) const { return x_epoch[w] == e; }
};

struct MaxdegreeRun : ListRun {
    using ListRun::ListRun;

    void expand(std::vector<vertex_t> p, std::vector<vertex_t> x,
                std::uint64_t parent_epoch, std::uint32_t depth) {
        ++stats.recursive_calls;
        stats.max_depth = std::max(stats.max_depth, depth);

        if (p.empty()) {
            if (x.empty() && !r.empty() && !sink.report(r)) stopped = true;
            return;
        }

        std::uint64_t e = ++epoch_counter;
        for (vertex_t w : p) p_epoch[w] = e;
        for (vertex_t w : x) x_epoch[w] = e;
        std::size_t original_x_size = x.size();

        // Pivot score walks the candidate's full adjacency list, testing
        // each neighbor for membership in P.
        ++stats.pivot_selections;
        vertex_t pivot = choose_pivot(std::span<const vertex_t>(p),
                                      std::span<const vertex_t>(x), [&](vertex_t u) {
                                          std::uint64_t c = 0;
                                          for (vertex_t w : g.neighbors(u)) c += in_p(w, e);
                                          return c;
                                      });

        for (vertex_t w : g.neighbors(pivot)) mark_epoch[w] = e;
        std::vector<vertex_t> candidates;
        for (vertex_t v : p)
            if (mark_epoch[v] != e) candidates.push_back(v);

        for (vertex_t v : candidates) {
            std::vector<vertex_t> next_p, next_x;
            for (vertex_t w : g.neighbors(v)) {
                if (in_p(w, e))
                    next_p.push_back(w);
                else if (in_x(w, e))
                    next_x.push_back(w);
            }

            r.push_back(v);
            expand(std::move(next_p), std::move(next_x), e, depth + 1);
            r.pop_back();
            if (stopped) break;

            p.erase(std::find(p.begin(), p.end(), v));
            p_epoch[v] = 0;
            x.push_back(v);
            x_epoch[v] = e;
        }

        // Hand the stamps back to the caller.
        for (vertex_t w : p) p_epoch[w] = parent_epoch;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i < original_x_size) {
                x_epoch[x[i]] = parent_epoch;
            } else {
                x_epoch[x[i]] = 0;
                p_epoch[x[i]] = parent_epoch; // moved vertices sat in the caller's P
            }
        }
    }
};

struct HybridRun : ListRun {
    const DegeneracyOrder& ord;

    HybridRun(const Graph& graph, const DegeneracyOrder& o, CliqueSink& s)
        : ListRun(graph, s), ord(o) {}

    // Adjacency test through the ordering's split lists: the edge {a, b},
    // if present, is recorded in the later list of whichever endpoint comes
    // first. Both lists are id-sorted.
    bool adjacent(vertex_t a, vertex_t b) const {
        auto later = ord.position[a] < ord.position[b] ? ord.later_neighbors(a)
                                                       : ord.later_neighbors(b);
        vertex_t needle = ord.position[a] < ord.position[b] ? b : a;
        return std::binary_search(later.begin(), later.end(), needle);
    }

    void expand(std::vector<vertex_t> p, std::vector<vertex_t> x,
                std::uint64_t parent_epoch, std::uint32_t depth) {
        ++stats.recursive_calls;
        stats.max_depth = std::max(stats.max_depth, depth);

        if (p.empty()) {
            if (x.empty() && !sink.report(r)) stopped = true;
            return;
        }

        std::uint64_t e = ++epoch_counter;
        for (vertex_t w : p) p_epoch[w] = e;
        std::size_t original_x_size = x.size();

        // Pivot score counts only later neighbors in P, a lower bound on
        // |Gamma(u) n P| (exact for top-level X members). Any member of
        // P u X is a sound pivot, so undercounting only costs pruning.
        ++stats.pivot_selections;
        vertex_t pivot = choose_pivot(std::span<const vertex_t>(p),
                                      std::span<const vertex_t>(x), [&](vertex_t u) {
                                          std::uint64_t c = 0;
                                          for (vertex_t w : ord.later_neighbors(u))
                                              c += in_p(w, e);
                                          return c;
                                      });

        std::vector<vertex_t> candidates;
        for (vertex_t v : p)
            if (!adjacent(pivot, v)) candidates.push_back(v); // pivot itself passes

        for (vertex_t v : candidates) {
            std::vector<vertex_t> next_p, next_x;
            for (vertex_t w : p)
                if (w != v && adjacent(v, w)) next_p.push_back(w);
            for (vertex_t w : x)
                if (adjacent(v, w)) next_x.push_back(w);

            r.push_back(v);
            expand(std::move(next_p), std::move(next_x), e, depth + 1);
            r.pop_back();
            if (stopped) break;

            p.erase(std::find(p.begin(), p.end(), v));
            p_epoch[v] = 0;
            x.push_back(v);
        }

        for (vertex_t w : p) p_epoch[w] = parent_epoch;
        for (std::size_t i = original_x_size; i < x.size(); ++i)
            p_epoch[x[i]] = parent_epoch;
    }
};

} // namespace

EnumStats enumerate_maxdegree(const Graph& g, CliqueSink& sink) {
    MaxdegreeRun run(g, sink);
    std::vector<vertex_t> p(g.vertex_count());
    for (vertex_t v = 0; v < g.vertex_count(); ++v) p[v] = v;
    run.expand(std::move(p), {}, 0, 1);
    return run.stats;
}

EnumStats enumerate_hybrid(const Graph& g, CliqueSink& sink) {
    DegeneracyOrder ord = degeneracy_ordering(g);
    HybridRun run(g, ord, sink);
    for (vertex_t vi : ord.order) {
        auto later = ord.later_neighbors(vi);
        auto earlier = ord.earlier_neighbors(vi);
        run.r.assign(1, vi);
        run.expand(std::vector<vertex_t>(later.begin(), later.end()),
                   std::vector<vertex_t>(earlier.begin(), earlier.end()), 0, 1);
        if (run.stopped) break;
    }
    return run.stats;
}

} // namespace mce
