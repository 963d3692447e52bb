#ifndef MCE_DEGENERACY_HPP
#define MCE_DEGENERACY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mce/graph.hpp"

namespace mce {

// A degeneracy ordering of a graph: the sequence in which repeatedly
// removing a minimum-remaining-degree vertex empties the graph.
//
// order[i] is the i-th removed vertex, position its inverse. degeneracy is
// the maximum remaining degree observed at any removal; every vertex has at
// most that many neighbors after it in the ordering. later/earlier split
// each adjacency list around the vertex's position; both halves are stored
// id-sorted.
struct DegeneracyOrder {
    std::vector<vertex_t> order;
    std::vector<vertex_t> position;
    std::uint32_t degeneracy = 0;

    std::vector<std::uint32_t> later_offsets;
    std::vector<vertex_t> later_adjacency;
    std::vector<std::uint32_t> earlier_offsets;
    std::vector<vertex_t> earlier_adjacency;

    std::uint32_t vertex_count() const noexcept {
        return static_cast<std::uint32_t>(order.size());
    }

    std::span<const vertex_t> later_neighbors(vertex_t v) const {
        return {later_adjacency.data() + later_offsets[v],
                later_offsets[v + 1] - later_offsets[v]};
    }

    std::span<const vertex_t> earlier_neighbors(vertex_t v) const {
        return {earlier_adjacency.data() + earlier_offsets[v],
                earlier_offsets[v + 1] - earlier_offsets[v]};
    }
};

// Bucketed min-degree peeling. Ties break toward the smallest vertex id, so
// the result is one canonical ordering per graph.
DegeneracyOrder degeneracy_ordering(const Graph& g);

// True iff ord is internally consistent and consistent with g: order and
// position are inverse permutations, later/earlier partition each adjacency
// list, and degeneracy equals the maximum later-neighbor count exactly.
bool validate_ordering(const Graph& g, const DegeneracyOrder& ord);

} // namespace mce

#endif // MCE_DEGENERACY_HPP
