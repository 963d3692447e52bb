#include <algorithm>
#include <vector>

#include "mce/enumerate.hpp"

namespace mce {

namespace {

struct TomitaRun {
    const BitMatrix& adj;
    CliqueSink& sink;
    EnumStats stats;
    std::vector<vertex_t> r;
    bool stopped = false;

    // p and x are consumed by the caller after the call returns; the
    // recursion owns fresh copies per frame.
    void expand(std::vector<vertex_t>& p, std::vector<vertex_t>& x, std::uint32_t depth) {
        ++stats.recursive_calls;
        stats.max_depth = std::max(stats.max_depth, depth);

        if (p.empty()) {
            if (x.empty() && !r.empty() && !sink.report(r)) stopped = true;
            return;
        }

        ++stats.pivot_selections;
        vertex_t pivot = choose_pivot(std::span<const vertex_t>(p),
                                      std::span<const vertex_t>(x), [&](vertex_t u) {
                                          std::uint64_t c = 0;
                                          for (vertex_t w : p) c += adj.test(u, w);
                                          return c;
                                      });

        std::vector<vertex_t> candidates;
        for (vertex_t v : p)
            if (!adj.test(pivot, v)) candidates.push_back(v);

        for (vertex_t v : candidates) {
            std::vector<vertex_t> next_p, next_x;
            for (vertex_t w : p)
                if (adj.test(v, w)) next_p.push_back(w);
            for (vertex_t w : x)
                if (adj.test(v, w)) next_x.push_back(w);

            r.push_back(v);
            expand(next_p, next_x, depth + 1);
            r.pop_back();
            if (stopped) return;

            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }
};

} // namespace

EnumStats enumerate_tomita(const BitMatrix& matrix, CliqueSink& sink) {
    TomitaRun run{matrix, sink, {}, {}, false};
    std::vector<vertex_t> p(matrix.dimension());
    for (vertex_t v = 0; v < matrix.dimension(); ++v) p[v] = v;
    std::vector<vertex_t> x;
    run.expand(p, x, 1);
    return run.stats;
}

EnumStats enumerate_tomita(const Graph& g, CliqueSink& sink, std::uint32_t cap) {
    BitMatrix matrix = to_bit_matrix(g, cap);
    return enumerate_tomita(matrix, sink);
}

vertex_t choose_pivot(const Graph& g, std::span<const vertex_t> p,
                      std::span<const vertex_t> x) {
    return choose_pivot(p, x, [&](vertex_t u) {
        std::uint64_t c = 0;
        for (vertex_t w : p) c += g.has_edge(u, w);
        return c;
    });
}

} // namespace mce
