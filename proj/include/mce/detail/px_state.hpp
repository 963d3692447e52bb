#ifndef MCE_DETAIL_PX_STATE_HPP
#define MCE_DETAIL_PX_STATE_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mce/degeneracy.hpp"
#include "mce/graph.hpp"

namespace mce::detail {

// A contiguous window of the shared arena: [x_begin, p_begin) holds X,
// [p_begin, p_end) holds P. Copied by value into each recursion frame.
struct Window {
    std::uint32_t x_begin = 0;
    std::uint32_t p_begin = 0;
    std::uint32_t p_end = 0;

    std::uint32_t p_size() const noexcept { return p_end - p_begin; }
    std::uint32_t x_size() const noexcept { return p_begin - x_begin; }
    std::uint32_t size() const noexcept { return p_end - x_begin; }
};

// The X|P sets of every live recursion frame share one arena. A reverse
// index gives each window vertex's position, so set membership is a range
// test on the position. Children receive a subwindow around the X/P
// dividing line; moving a vertex between sets is a swap plus a boundary
// shift, and each call journals its P-to-X moves so the caller's window
// contents survive the call.
class PXState {
public:
    static constexpr std::uint32_t kNoPosition = std::numeric_limits<std::uint32_t>::max();

    PXState(std::uint32_t vertex_count, std::uint32_t arena_capacity)
        : arena_(arena_capacity), index_of_(vertex_count, kNoPosition) {}

    // Lays out [x_members | p_members] starting at arena position 0.
    Window fill_top_level(std::span<const vertex_t> x_members,
                          std::span<const vertex_t> p_members) {
        Window w;
        std::uint32_t pos = 0;
        for (vertex_t v : x_members) place(v, pos++);
        w.p_begin = pos;
        for (vertex_t v : p_members) place(v, pos++);
        w.p_end = pos;
        return w;
    }

    // Resets the reverse index entries of a window (after a top-level call).
    void clear_window(const Window& w) {
        for (std::uint32_t i = w.x_begin; i < w.p_end; ++i)
            index_of_[arena_[i]] = kNoPosition;
    }

    vertex_t at(std::uint32_t pos) const { return arena_[pos]; }
    std::uint32_t position(vertex_t v) const { return index_of_[v]; }

    bool in_p(vertex_t v, const Window& w) const {
        std::uint32_t i = index_of_[v];
        return i != kNoPosition && i >= w.p_begin && i < w.p_end;
    }

    bool in_x(vertex_t v, const Window& w) const {
        std::uint32_t i = index_of_[v];
        return i != kNoPosition && i >= w.x_begin && i < w.p_begin;
    }

    // Prepares the subwindow for a recursive call: neighbors of the chosen
    // vertex that are in X move to the end of the X subarray, neighbors in
    // P to the front of the P subarray. The child window hugs the dividing
    // line; positions of the parent window are only permuted within their
    // own subarray, so the parent's sets are unchanged.
    Window gather_child(const Window& w, std::span<const vertex_t> neighbors_in_x,
                        std::span<const vertex_t> neighbors_in_p) {
        Window child;
        std::uint32_t placed_x = 0;
        for (vertex_t u : neighbors_in_x) {
            swap_positions(index_of_[u], w.p_begin - 1 - placed_x);
            ++placed_x;
        }
        std::uint32_t placed_p = 0;
        for (vertex_t u : neighbors_in_p) {
            swap_positions(index_of_[u], w.p_begin + placed_p);
            ++placed_p;
        }
        child.x_begin = w.p_begin - placed_x;
        child.p_begin = w.p_begin;
        child.p_end = w.p_begin + placed_p;
        return child;
    }

    // v leaves P for X: swap it to the front of the P subarray and move the
    // boundary past it.
    void move_p_to_x(vertex_t v, Window& w) {
        swap_positions(index_of_[v], w.p_begin);
        ++w.p_begin;
    }

    // Undo of move_p_to_x; callers replay their journal in reverse.
    void move_x_to_p(vertex_t v, Window& w) {
        --w.p_begin;
        swap_positions(index_of_[v], w.p_begin);
    }

    std::uint64_t slot_count() const noexcept {
        return std::uint64_t(arena_.size()) + index_of_.size();
    }

private:
    void place(vertex_t v, std::uint32_t pos) {
        arena_[pos] = v;
        index_of_[v] = pos;
    }

    void swap_positions(std::uint32_t i, std::uint32_t j) {
        if (i == j) return;
        vertex_t a = arena_[i], b = arena_[j];
        arena_[i] = b;
        arena_[j] = a;
        index_of_[a] = j;
        index_of_[b] = i;
    }

    std::vector<vertex_t> arena_;
    std::vector<std::uint32_t> index_of_;
};

// One fixed-capacity array per vertex holding its neighbors that are
// currently in P as a prefix, plus the prefix length. Pivot scoring reads
// the stored length; updates swap a vertex across the prefix boundary.
// Total allocation is sum over u of min(deg(u), d) slots, at most 2m.
//
// Demotions park the removed vertex just past the shrinking prefix, and
// deeper calls only ever touch positions below their own prefix length, so
// a caller restores its view of an array by resetting the saved length.
class PivotArrays {
public:
    PivotArrays(const Graph& g, std::uint32_t degeneracy) {
        std::uint32_t n = g.vertex_count();
        offsets_.resize(n + 1, 0);
        for (vertex_t v = 0; v < n; ++v) {
            std::uint32_t c = g.degree(v);
            offsets_[v + 1] = offsets_[v] + (c < degeneracy ? c : degeneracy);
        }
        flat_.resize(offsets_[n]);
        counts_.resize(n, 0);
    }

    void reset(vertex_t u) { counts_[u] = 0; }

    void append(vertex_t u, vertex_t neighbor_in_p) {
        flat_[offsets_[u] + counts_[u]] = neighbor_in_p;
        ++counts_[u];
    }

    std::uint32_t count(vertex_t u) const { return counts_[u]; }
    void set_count(vertex_t u, std::uint32_t c) { counts_[u] = c; }

    std::span<const vertex_t> prefix(vertex_t u) const {
        return {flat_.data() + offsets_[u], counts_[u]};
    }

    bool prefix_contains(vertex_t u, vertex_t v) const {
        const vertex_t* base = flat_.data() + offsets_[u];
        for (std::uint32_t i = 0; i < counts_[u]; ++i)
            if (base[i] == v) return true;
        return false;
    }

    // Removes v from u's prefix (v must be present): v swaps with the last
    // prefix element and the prefix shrinks by one, parking v at the new
    // boundary.
    void demote(vertex_t u, vertex_t v) {
        vertex_t* base = flat_.data() + offsets_[u];
        std::uint32_t c = counts_[u];
        for (std::uint32_t i = 0; i < c; ++i) {
            if (base[i] == v) {
                base[i] = base[c - 1];
                base[c - 1] = v;
                counts_[u] = c - 1;
                return;
            }
        }
    }

    // Keeps only prefix members for which keep() holds; returns the old
    // length for the caller's journal.
    template <typename Keep>
    std::uint32_t shrink_prefix(vertex_t u, Keep&& keep) {
        vertex_t* base = flat_.data() + offsets_[u];
        std::uint32_t old = counts_[u];
        std::uint32_t c = old;
        std::uint32_t i = 0;
        while (i < c) {
            vertex_t w = base[i];
            if (keep(w)) {
                ++i;
            } else {
                base[i] = base[c - 1];
                base[c - 1] = w;
                --c;
            }
        }
        counts_[u] = c;
        return old;
    }

    std::uint64_t slot_count() const noexcept {
        return std::uint64_t(offsets_.size()) + flat_.size() + counts_.size();
    }

private:
    std::vector<std::uint32_t> offsets_;
    std::vector<vertex_t> flat_;
    std::vector<std::uint32_t> counts_;
};

} // namespace mce::detail

#endif // MCE_DETAIL_PX_STATE_HPP
