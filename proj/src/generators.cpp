#include "mce/generators.hpp"

#include <random>
#include <string>
#include <vector>

#include "mce/errors.hpp"

namespace mce {

namespace {

// Top 53 bits of a draw, mapped to [0, 1). Unlike the standard
// distributions, this mapping is pinned by the standard's mt19937_64
// definition and IEEE-754 arithmetic, so it is identical everywhere.
double unit_draw(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Graph moon_moser(std::uint32_t part_count) {
    if (part_count < 1) throw Error("moon_moser: part count must be >= 1");
    const std::uint32_t n = 3 * part_count;
    std::vector<Edge> edges;
    edges.reserve(std::size_t(n) * (n - 3) / 2);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (u / 3 != v / 3) edges.emplace_back(u, v);
    return build_graph(edges, n);
}

Graph gnp(std::uint32_t n, double edge_probability, std::uint64_t seed) {
    std::vector<Edge> edges;
    if (edge_probability >= 1.0) {
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else if (edge_probability > 0.0) {
        std::mt19937_64 rng(seed);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v)
                if (unit_draw(rng) < edge_probability) edges.emplace_back(u, v);
    }
    return build_graph(edges, n);
}

Graph named_small(std::string_view family, std::uint32_t size) {
    std::vector<Edge> edges;
    if (family == "complete") {
        for (std::uint32_t u = 0; u < size; ++u)
            for (std::uint32_t v = u + 1; v < size; ++v) edges.emplace_back(u, v);
    } else if (family == "path") {
        for (std::uint32_t v = 1; v < size; ++v) edges.emplace_back(v - 1, v);
    } else if (family == "cycle") {
        if (size < 3) throw Error("cycle: needs at least 3 vertices");
        for (std::uint32_t v = 1; v < size; ++v) edges.emplace_back(v - 1, v);
        edges.emplace_back(size - 1, 0);
    } else if (family == "star") {
        for (std::uint32_t v = 1; v < size; ++v) edges.emplace_back(0, v);
    } else {
        throw UnknownFamily("unknown graph family: " + std::string(family));
    }
    return build_graph(edges, size);
}

Graph grid_network(std::uint32_t rows, std::uint32_t cols,
                   double keep_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto id = [cols](std::uint32_t r, std::uint32_t c) { return label_t(r) * cols + c; };
    auto keep = [&] {
        return keep_probability >= 1.0 ||
               (keep_probability > 0.0 && unit_draw(rng) < keep_probability);
    };
    std::vector<Edge> edges;
    for (std::uint32_t r = 0; r < rows; ++r) {
        for (std::uint32_t c = 0; c < cols; ++c) {
            if (c + 1 < cols && keep()) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows && keep()) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return build_graph(edges, rows * cols);
}

} // namespace mce
