#include "mce/graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "mce/errors.hpp"

namespace mce {

Graph::Graph(std::uint32_t n, std::vector<std::uint32_t> offsets,
             std::vector<vertex_t> adjacency, std::vector<label_t> labels)
    : n_(n),
      offsets_(std::move(offsets)),
      adjacency_(std::move(adjacency)),
      labels_(std::move(labels)) {
    if (offsets_.size() != std::size_t(n_) + 1)
        throw Error("graph: offsets size must be n+1");
    if (offsets_[n_] != adjacency_.size())
        throw Error("graph: adjacency size disagrees with offsets");
    if (!labels_.empty() && labels_.size() != n_)
        throw Error("graph: label table size mismatch");
    m_ = adjacency_.size() / 2;
    for (vertex_t v = 0; v < n_; ++v)
        max_degree_ = std::max(max_degree_, degree(v));
}

bool Graph::has_edge(vertex_t u, vertex_t v) const {
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (vertex_t u = 0; u < n_; ++u)
        for (vertex_t w : neighbors(u))
            if (w > u) out.emplace_back(label(u), label(w));
    return out;
}

Graph build_graph(std::span<const Edge> edges,
                  std::optional<std::uint32_t> min_vertex_count) {
    std::unordered_map<label_t, vertex_t> id_of;
    id_of.reserve(edges.size() * 2);
    std::vector<label_t> labels;

    auto intern = [&](label_t lab) -> vertex_t {
        auto [it, inserted] = id_of.try_emplace(lab, vertex_t(labels.size()));
        if (inserted) labels.push_back(lab);
        return it->second;
    };

    std::vector<std::pair<vertex_t, vertex_t>> directed;
    directed.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        vertex_t u = intern(a);
        vertex_t v = intern(b);
        if (u == v) continue; // self-loop: vertex kept, edge dropped
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }

    // Pad with isolated vertices labeled by the smallest unused
    // non-negative integers. With dense 0-based (or DIMACS-style) inputs
    // this reproduces exactly the missing ids.
    if (min_vertex_count && labels.size() < *min_vertex_count) {
        std::uint32_t needed = *min_vertex_count - std::uint32_t(labels.size());
        for (label_t candidate = 0; needed > 0; ++candidate) {
            if (id_of.contains(candidate)) continue;
            intern(candidate);
            --needed;
        }
    }

    auto n = std::uint32_t(labels.size());

    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    std::vector<std::uint32_t> offsets(std::size_t(n) + 1, 0);
    for (const auto& [u, v] : directed) ++offsets[u + 1];
    for (vertex_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    std::vector<vertex_t> adjacency(directed.size());
    for (std::size_t i = 0; i < directed.size(); ++i) adjacency[i] = directed[i].second;

    // Identity labeling needs no side table.
    bool identity = true;
    for (vertex_t v = 0; v < n; ++v) {
        if (labels[v] != label_t(v)) {
            identity = false;
            break;
        }
    }
    if (identity) labels.clear();

    return Graph(n, std::move(offsets), std::move(adjacency), std::move(labels));
}

Graph build_graph(std::initializer_list<Edge> edges,
                  std::optional<std::uint32_t> min_vertex_count) {
    return build_graph(std::span<const Edge>(edges.begin(), edges.size()),
                       min_vertex_count);
}

} // namespace mce
