#include "mce/degeneracy.hpp"

#include <algorithm>

namespace mce {

// Min-degree peeling with an array of degree buckets. Each bucket is a lazy
// binary min-heap on vertex id: decrementing a neighbor pushes a fresh
// entry into its new bucket, and stale entries are discarded on pop by
// checking the vertex's current degree. This keeps the smallest-id
// tie-break exact (a plain swap-into-bucket structure loses id order)
// while staying near-linear: at most n + 2m heap pushes total.
DegeneracyOrder degeneracy_ordering(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    DegeneracyOrder ord;
    ord.order.reserve(n);
    ord.position.assign(n, 0);

    std::vector<std::uint32_t> remaining_degree(n);
    std::vector<bool> removed(n, false);
    std::vector<std::vector<vertex_t>> buckets(std::size_t(g.max_degree()) + 1);
    for (vertex_t v = 0; v < n; ++v) {
        remaining_degree[v] = g.degree(v);
        buckets[remaining_degree[v]].push_back(v);
    }
    // Initial fill is ascending by id, which is already heap-ordered.

    auto heap_push = [](std::vector<vertex_t>& b, vertex_t v) {
        b.push_back(v);
        std::push_heap(b.begin(), b.end(), std::greater<vertex_t>());
    };
    auto heap_pop = [](std::vector<vertex_t>& b) {
        std::pop_heap(b.begin(), b.end(), std::greater<vertex_t>());
        vertex_t v = b.back();
        b.pop_back();
        return v;
    };

    std::uint32_t d = 0;
    std::uint32_t cursor = 0; // min remaining degree; drops by at most 1 per removal
    for (std::uint32_t step = 0; step < n; ++step) {
        while (true) {
            while (cursor < buckets.size() && buckets[cursor].empty()) ++cursor;
            vertex_t v = heap_pop(buckets[cursor]);
            if (removed[v] || remaining_degree[v] != cursor) continue; // stale
            d = std::max(d, cursor);
            ord.position[v] = step;
            ord.order.push_back(v);
            removed[v] = true;
            for (vertex_t u : g.neighbors(v)) {
                if (removed[u]) continue;
                heap_push(buckets[--remaining_degree[u]], u);
            }
            if (cursor > 0) --cursor;
            break;
        }
    }
    ord.degeneracy = d;

    ord.later_offsets.assign(std::size_t(n) + 1, 0);
    ord.earlier_offsets.assign(std::size_t(n) + 1, 0);
    for (vertex_t v = 0; v < n; ++v) {
        for (vertex_t u : g.neighbors(v)) {
            if (ord.position[u] > ord.position[v])
                ++ord.later_offsets[v + 1];
            else
                ++ord.earlier_offsets[v + 1];
        }
    }
    for (vertex_t v = 0; v < n; ++v) {
        ord.later_offsets[v + 1] += ord.later_offsets[v];
        ord.earlier_offsets[v + 1] += ord.earlier_offsets[v];
    }
    ord.later_adjacency.resize(ord.later_offsets[n]);
    ord.earlier_adjacency.resize(ord.earlier_offsets[n]);
    std::vector<std::uint32_t> later_fill(ord.later_offsets.begin(), ord.later_offsets.end() - 1);
    std::vector<std::uint32_t> earlier_fill(ord.earlier_offsets.begin(), ord.earlier_offsets.end() - 1);
    for (vertex_t v = 0; v < n; ++v) {
        for (vertex_t u : g.neighbors(v)) { // ascending, so both halves stay id-sorted
            if (ord.position[u] > ord.position[v])
                ord.later_adjacency[later_fill[v]++] = u;
            else
                ord.earlier_adjacency[earlier_fill[v]++] = u;
        }
    }
    return ord;
}

bool validate_ordering(const Graph& g, const DegeneracyOrder& ord) {
    const std::uint32_t n = g.vertex_count();
    if (ord.order.size() != n || ord.position.size() != n) return false;
    if (ord.later_offsets.size() != std::size_t(n) + 1 ||
        ord.earlier_offsets.size() != std::size_t(n) + 1)
        return false;

    for (std::uint32_t i = 0; i < n; ++i) {
        vertex_t v = ord.order[i];
        if (v >= n || ord.position[v] != i) return false;
    }

    std::uint32_t max_later = 0;
    for (vertex_t v = 0; v < n; ++v) {
        auto later = ord.later_neighbors(v);
        auto earlier = ord.earlier_neighbors(v);
        if (later.size() + earlier.size() != g.degree(v)) return false;

        // later u earlier must partition the adjacency list; both are
        // id-sorted, so a merge comparison against the sorted adjacency
        // checks containment and disjointness at once.
        auto adj = g.neighbors(v);
        std::size_t li = 0, ei = 0;
        for (vertex_t u : adj) {
            if (li < later.size() && later[li] == u) {
                if (ord.position[u] <= ord.position[v]) return false;
                ++li;
            } else if (ei < earlier.size() && earlier[ei] == u) {
                if (ord.position[u] > ord.position[v]) return false;
                ++ei;
            } else {
                return false;
            }
        }
        max_later = std::max(max_later, std::uint32_t(later.size()));
    }
    if (n > 0 && max_later != ord.degeneracy) return false;
    if (n == 0 && ord.degeneracy != 0) return false;
    return true;
}

} // namespace mce
