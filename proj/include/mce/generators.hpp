#ifndef MCE_GENERATORS_HPP
#define MCE_GENERATORS_HPP

#include <cstdint>
#include <string_view>

#include "mce/graph.hpp"

namespace mce {

// Complete k-partite graph with parts of size 3: n = 3k,
// m = C(3k,2) - 3k, and exactly 3^k maximal cliques (one vertex per part).
Graph moon_moser(std::uint32_t part_count);

// Erdos-Renyi G(n, p). Each unordered pair {u, v}, visited in ascending
// (u, v) order, becomes an edge independently with probability p. Draws
// come from std::mt19937_64 seeded with seed, mapped to [0,1) by taking the
// top 53 bits, so identical (n, p, seed) give bit-identical graphs on every
// platform. p <= 0 and p >= 1 consume no randomness.
Graph gnp(std::uint32_t n, double edge_probability, std::uint64_t seed);

// Fixture families: "complete", "path", "cycle", "star"; size is the
// vertex count. Throws UnknownFamily for unrecognized names.
Graph named_small(std::string_view family, std::uint32_t size);

// Road-network-like instance: a rows x cols 4-neighbor grid where each
// grid edge is kept independently with probability keep_probability
// (row-major edge order, same RNG scheme as gnp). Dropped-out cells stay
// as isolated vertices, so n is always rows * cols.
Graph grid_network(std::uint32_t rows, std::uint32_t cols,
                   double keep_probability, std::uint64_t seed);

} // namespace mce

#endif // MCE_GENERATORS_HPP
