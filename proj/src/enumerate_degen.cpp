#include <algorithm>
#include <vector>

#include "mce/detail/px_state.hpp"
#include "mce/enumerate.hpp"
#include "mce/errors.hpp"

namespace mce {

namespace {

using detail::PivotArrays;
using detail::PXState;
using detail::Window;

// Degeneracy-ordered outer loop around the in-place recursion.
//
// Per outer vertex vi the arena window is [earlier(vi) | later(vi)]. The
// recursion never allocates: candidate lists, the per-candidate neighbor
// lists and the pivot-array length journal all live on shared stacks whose
// frames are delimited by saved sizes. Every structure here is bounded by a
// small multiple of n + m (see aux accounting at the bottom).
//
// SelfCheck instantiates the same code with brute-force recomputation of
// window sets and prefix lengths at every step, throwing on divergence.
template <bool SelfCheck>
class DegenRun {
public:
    DegenRun(const Graph& g, const DegeneracyOrder& ord, CliqueSink& sink)
        : g_(g), ord_(ord), sink_(sink),
          px_(g.vertex_count(), g.max_degree()),
          pivot_arrays_(g, ord.degeneracy),
          candidate_marks_(g.vertex_count(), 0) {
        r_.reserve(std::size_t(ord.degeneracy) + 2);
    }

    EnumStats run() {
        for (vertex_t vi : ord_.order) {
            auto earlier = ord_.earlier_neighbors(vi);
            auto later = ord_.later_neighbors(vi);
            Window window = px_.fill_top_level(earlier, later);

            init_pivot_arrays(window);

            r_.assign(1, vi);
            bool keep_going = process(window, 1);

            px_.clear_window(window);
            if (!keep_going) break;
        }
        finalize_aux_accounting();
        return stats_;
    }

private:
    // Fills each window vertex's array with its neighbors currently in P.
    // Driving the fill by later-neighbor lists keeps the cost at
    // O(d * window) per outer vertex: an edge {u, w} with w in P is either
    // a later edge of u or, when both endpoints are in P, a later edge of
    // one of them.
    void init_pivot_arrays(const Window& window) {
        for (std::uint32_t i = window.x_begin; i < window.p_end; ++i)
            pivot_arrays_.reset(px_.at(i));
        for (std::uint32_t i = window.x_begin; i < window.p_end; ++i) {
            vertex_t u = px_.at(i);
            bool u_in_p = i >= window.p_begin;
            for (vertex_t w : ord_.later_neighbors(u)) {
                if (!px_.in_p(w, window)) continue;
                pivot_arrays_.append(u, w);
                if (u_in_p) pivot_arrays_.append(w, u);
            }
        }
    }

    bool process(Window window, std::uint32_t depth) {
        ++stats_.recursive_calls;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if constexpr (SelfCheck) check_window(window);

        if (window.p_size() == 0)
            return window.x_size() != 0 || sink_.report(r_);

        vertex_t pivot = select_pivot(window);

        std::size_t cand_base = candidate_stack_.size();
        collect_candidates(window, pivot);
        std::size_t cand_end = candidate_stack_.size();
        note_stack_peaks();

        std::size_t moved = 0; // journal: candidates [cand_base, cand_base+moved) are in X
        bool keep_going = true;
        for (std::size_t ci = cand_base; ci < cand_end && keep_going; ++ci) {
            vertex_t v = candidate_stack_[ci];

            // Gather Gamma(v) within the window. Neighbors in P are v's own
            // prefix; neighbors in X are found by scanning X members'
            // prefixes for v.
            std::size_t nbr_base = neighbor_stack_.size();
            for (std::uint32_t i = window.x_begin; i < window.p_begin; ++i) {
                vertex_t u = px_.at(i);
                if (pivot_arrays_.prefix_contains(u, v)) neighbor_stack_.push_back(u);
            }
            std::size_t nbr_x_end = neighbor_stack_.size();
            for (vertex_t w : pivot_arrays_.prefix(v)) neighbor_stack_.push_back(w);
            std::size_t nbr_end = neighbor_stack_.size();
            note_stack_peaks();

            // The stacks may reallocate inside the recursion; only indices
            // survive across the child call.
            Window child = px_.gather_child(
                window,
                {neighbor_stack_.data() + nbr_base, nbr_x_end - nbr_base},
                {neighbor_stack_.data() + nbr_x_end, nbr_end - nbr_x_end});

            // Shrink window members' prefixes to the child's P, journaling
            // old lengths. Demoted entries park just past the shrunk prefix
            // and deeper calls never reach them, so restoring the lengths
            // restores the prefixes.
            std::size_t journal_base = journal_.size();
            for (std::uint32_t i = child.x_begin; i < child.p_end; ++i) {
                vertex_t u = px_.at(i);
                std::uint32_t old = pivot_arrays_.shrink_prefix(
                    u, [&](vertex_t w) { return px_.in_p(w, child); });
                journal_.push_back({u, old});
            }
            note_stack_peaks();

            std::vector<vertex_t> shadow_x, shadow_p;
            if constexpr (SelfCheck) {
                shadow_x = window_set(window.x_begin, window.p_begin);
                shadow_p = window_set(window.p_begin, window.p_end);
            }

            r_.push_back(v);
            keep_going = process(child, depth + 1);
            r_.pop_back();

            for (std::size_t j = journal_.size(); j-- > journal_base;)
                pivot_arrays_.set_count(journal_[j].vertex, journal_[j].length);
            journal_.resize(journal_base);

            if constexpr (SelfCheck) {
                if (shadow_x != window_set(window.x_begin, window.p_begin) ||
                    shadow_p != window_set(window.p_begin, window.p_end))
                    throw Error("degen self-check: call did not restore its caller's window");
            }

            if (keep_going) {
                px_.move_p_to_x(v, window);
                ++moved;
                for (std::size_t i = nbr_base; i < nbr_end; ++i)
                    pivot_arrays_.demote(neighbor_stack_[i], v);
            }
            neighbor_stack_.resize(nbr_base);
        }

        // Give the caller its window back: moved vertices return to P. The
        // caller's own journal restores the pivot-array lengths.
        for (std::size_t j = moved; j-- > 0;)
            px_.move_x_to_p(candidate_stack_[cand_base + j], window);
        candidate_stack_.resize(cand_base);
        return keep_going;
    }

    vertex_t select_pivot(const Window& window) {
        ++stats_.pivot_selections;
        vertex_t best = 0;
        std::uint32_t best_count = 0;
        bool first = true;
        for (std::uint32_t i = window.x_begin; i < window.p_end; ++i) {
            vertex_t u = px_.at(i);
            std::uint32_t c = pivot_arrays_.count(u);
            if constexpr (SelfCheck) check_prefix(u, window);
            if (first || c > best_count || (c == best_count && u < best)) {
                best = u;
                best_count = c;
                first = false;
            }
        }
        return best;
    }

    // Candidates are P minus the pivot's neighbors (the pivot itself, when
    // in P, is never its own neighbor and therefore branches too).
    void collect_candidates(const Window& window, vertex_t pivot) {
        ++mark_epoch_;
        for (vertex_t w : pivot_arrays_.prefix(pivot)) candidate_marks_[w] = mark_epoch_;
        for (std::uint32_t i = window.p_begin; i < window.p_end; ++i) {
            vertex_t v = px_.at(i);
            if (candidate_marks_[v] != mark_epoch_) candidate_stack_.push_back(v);
        }
    }

    std::vector<vertex_t> window_set(std::uint32_t begin, std::uint32_t end) {
        std::vector<vertex_t> members;
        members.reserve(end - begin);
        for (std::uint32_t i = begin; i < end; ++i) members.push_back(px_.at(i));
        std::sort(members.begin(), members.end());
        return members;
    }

    void check_window(const Window& window) {
        for (std::uint32_t i = window.x_begin; i < window.p_end; ++i) {
            vertex_t v = px_.at(i);
            if (px_.position(v) != i)
                throw Error("degen self-check: arena and index out of sync");
        }
        // Every window member must be adjacent to all of R.
        for (std::uint32_t i = window.x_begin; i < window.p_end; ++i) {
            vertex_t v = px_.at(i);
            for (vertex_t rv : r_)
                if (!g_.has_edge(v, rv))
                    throw Error("degen self-check: window vertex not adjacent to R");
        }
    }

    void check_prefix(vertex_t u, const Window& window) {
        std::uint32_t expected = 0;
        for (vertex_t w : g_.neighbors(u)) expected += px_.in_p(w, window);
        if (expected != pivot_arrays_.count(u))
            throw Error("degen self-check: prefix length diverges from |Gamma(u) n P|");
        for (vertex_t w : pivot_arrays_.prefix(u))
            if (!px_.in_p(w, window))
                throw Error("degen self-check: prefix holds a non-P vertex");
    }

    void note_stack_peaks() {
        stack_peak_ = std::max({stack_peak_,
                                std::uint64_t(candidate_stack_.size()) +
                                    neighbor_stack_.size() + 2 * journal_.size()});
    }

    void finalize_aux_accounting() {
        std::uint64_t fixed = px_.slot_count() + pivot_arrays_.slot_count() +
                              candidate_marks_.size() + r_.capacity();
        std::uint64_t ordering = std::uint64_t(ord_.order.size()) + ord_.position.size() +
                                 ord_.later_offsets.size() + ord_.earlier_offsets.size() +
                                 ord_.later_adjacency.size() + ord_.earlier_adjacency.size();
        stats_.aux_slots_peak = fixed + ordering + stack_peak_;
    }

    struct JournalEntry {
        vertex_t vertex;
        std::uint32_t length;
    };

    const Graph& g_;
    const DegeneracyOrder& ord_;
    CliqueSink& sink_;
    EnumStats stats_;
    PXState px_;
    PivotArrays pivot_arrays_;
    std::vector<vertex_t> r_;
    std::vector<vertex_t> candidate_stack_;
    std::vector<vertex_t> neighbor_stack_;
    std::vector<JournalEntry> journal_;
    std::vector<std::uint64_t> candidate_marks_;
    std::uint64_t mark_epoch_ = 0;
    std::uint64_t stack_peak_ = 0;
};

} // namespace

EnumStats enumerate_degen(const Graph& g, CliqueSink& sink) {
    DegeneracyOrder ord = degeneracy_ordering(g);
    return DegenRun<false>(g, ord, sink).run();
}

namespace testing {

EnumStats enumerate_degen_selfcheck(const Graph& g, CliqueSink& sink) {
    DegeneracyOrder ord = degeneracy_ordering(g);
    return DegenRun<true>(g, ord, sink).run();
}

} // namespace testing

} // namespace mce
