#ifndef MCE_ORACLE_HPP
#define MCE_ORACLE_HPP

#include <vector>

#include "mce/enumerate.hpp"
#include "mce/graph.hpp"

namespace mce {

using CliqueList = std::vector<std::vector<vertex_t>>;

// Exhaustive ground truth for small graphs, by filtering every vertex
// subset through the clique and maximality predicates. Throws TooLarge for
// n > 32. The empty set is never reported, so the empty graph has zero
// maximal cliques.
CliqueList brute_force_cliques_subsets(const Graph& g);

// Bron-Kerbosch without pivoting: branches on every vertex of P, visiting
// one recursive call per clique of the graph. Throws TooLarge for n > 200.
// stats, when given, receives the call count (the reference point for
// pivot-effectiveness checks).
CliqueList brute_force_cliques_pivotfree(const Graph& g, EnumStats* stats = nullptr);

// Subset mode when n <= 32, otherwise pivot-free mode when n <= 200,
// otherwise TooLarge.
CliqueList brute_force_cliques(const Graph& g);

// Sorts each clique ascending and the list lexicographically. Throws
// DuplicateClique if two cliques contain the same vertex set.
CliqueList canonicalize(CliqueList cliques);

} // namespace mce

#endif // MCE_ORACLE_HPP
