#ifndef MCE_ENUMERATE_HPP
#define MCE_ENUMERATE_HPP

#include <cstdint>
#include <span>

#include "mce/bit_matrix.hpp"
#include "mce/degeneracy.hpp"
#include "mce/graph.hpp"
#include "mce/sink.hpp"

namespace mce {

struct EnumStats {
    std::uint64_t recursive_calls = 0;
    std::uint64_t pivot_selections = 0;
    std::uint32_t max_depth = 0;
    // Peak auxiliary slots (scalar array elements) held by the degen
    // variant, counting the ordering, the shared P|X arena, the pivot
    // arrays and all journals. Bounded by kDegenAuxSlotConstant * (n + m)
    // plus a small additive constant. Zero for the other variants.
    std::uint64_t aux_slots_peak = 0;
};

inline constexpr std::uint64_t kDegenAuxSlotConstant = 12;

// Pivoting Bron-Kerbosch on a packed adjacency matrix. The pivot is chosen
// by scanning matrix rows against the candidate set.
EnumStats enumerate_tomita(const BitMatrix& matrix, CliqueSink& sink);

// Convenience wrapper that builds the matrix first; throws CapExceeded for
// graphs above cap vertices.
EnumStats enumerate_tomita(const Graph& g, CliqueSink& sink,
                           std::uint32_t cap = kDefaultMatrixCap);

// Pivoting Bron-Kerbosch on adjacency lists: pivot counting and neighborhood
// intersections walk full adjacency lists against a membership flag array.
EnumStats enumerate_maxdegree(const Graph& g, CliqueSink& sink);

// Degeneracy-ordered outer loop (one top-level subproblem per vertex, with
// candidates limited to later neighbors) around a list-based pivoting
// recursion whose pivot counting walks later-neighbor lists only.
EnumStats enumerate_hybrid(const Graph& g, CliqueSink& sink);

// Degeneracy-ordered outer loop around the linear-space recursion: P and X
// live in one shared arena with a reverse index and per-call undo journals,
// and per-vertex neighbor arrays keep a maintained neighbors-in-P prefix
// for constant-time pivot scoring.
EnumStats enumerate_degen(const Graph& g, CliqueSink& sink);

namespace testing {
// Same as enumerate_degen but recomputes window sets and pivot-array
// prefixes the slow way at every step, throwing on any mismatch. Intended
// for small graphs in tests.
EnumStats enumerate_degen_selfcheck(const Graph& g, CliqueSink& sink);
} // namespace testing

// Returns the member of P u X with the most neighbors in P, breaking ties
// toward the smallest vertex id. count_in_p(v) must return |P n Gamma(v)|.
// Precondition: P u X nonempty.
template <typename CountInP>
vertex_t choose_pivot(std::span<const vertex_t> p, std::span<const vertex_t> x,
                      CountInP&& count_in_p) {
    vertex_t best = 0;
    std::uint64_t best_count = 0;
    bool first = true;
    for (auto view : {p, x}) {
        for (vertex_t u : view) {
            std::uint64_t c = count_in_p(u);
            if (first || c > best_count || (c == best_count && u < best)) {
                best = u;
                best_count = c;
                first = false;
            }
        }
    }
    return best;
}

// Adjacency-list flavor used by tests and small callers.
vertex_t choose_pivot(const Graph& g, std::span<const vertex_t> p,
                      std::span<const vertex_t> x);

} // namespace mce

#endif // MCE_ENUMERATE_HPP
