#ifndef MCE_GRAPH_HPP
#define MCE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mce {

using vertex_t = std::uint32_t;
using label_t = std::int64_t;

// Undirected edge between two external labels.
using Edge = std::pair<label_t, label_t>;

// Immutable undirected graph over dense vertex ids 0..n-1.
//
// Adjacency is stored in compressed form (per-vertex offsets into one flat
// neighbor array); every adjacency list is strictly ascending, symmetric,
// and free of self-loops and duplicates. External labels, when they differ
// from the internal ids, are kept in a side table.
class Graph {
public:
    Graph() = default;

    // Takes pre-validated compressed adjacency. offsets.size() == n+1,
    // adjacency.size() == 2m. labels may be empty (identity labeling).
    Graph(std::uint32_t n,
          std::vector<std::uint32_t> offsets,
          std::vector<vertex_t> adjacency,
          std::vector<label_t> labels);

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::uint64_t edge_count() const noexcept { return m_; }
    std::uint32_t max_degree() const noexcept { return max_degree_; }

    std::uint32_t degree(vertex_t v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const vertex_t> neighbors(vertex_t v) const {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    bool has_edge(vertex_t u, vertex_t v) const;

    label_t label(vertex_t v) const { return labels_.empty() ? label_t(v) : labels_[v]; }
    bool has_custom_labels() const noexcept { return !labels_.empty(); }

    // Edges as label pairs, ordered by internal (u, w) with u < w.
    // Re-ingesting this list through build_graph reproduces the same
    // labeled graph.
    std::vector<Edge> edge_list() const;

private:
    std::uint32_t n_ = 0;
    std::uint64_t m_ = 0;
    std::uint32_t max_degree_ = 0;
    std::vector<std::uint32_t> offsets_;
    std::vector<vertex_t> adjacency_;
    std::vector<label_t> labels_;
};

// Normalizes an arbitrary edge list into a Graph. Labels are remapped to
// dense ids in first-appearance order; self-loops are dropped (the label
// still registers a vertex); duplicate and reversed-duplicate edges
// collapse. min_vertex_count pads the graph with isolated vertices, labeled
// with the smallest non-negative integers not already in use, until the
// requested count is reached.
Graph build_graph(std::span<const Edge> edges,
                  std::optional<std::uint32_t> min_vertex_count = std::nullopt);

Graph build_graph(std::initializer_list<Edge> edges,
                  std::optional<std::uint32_t> min_vertex_count = std::nullopt);

} // namespace mce

#endif // MCE_GRAPH_HPP
