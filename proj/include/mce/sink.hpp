#ifndef MCE_SINK_HPP
#define MCE_SINK_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mce/graph.hpp"

namespace mce {

// Receives each maximal clique exactly once. count() always tracks the
// number of report events; collect mode additionally stores a copy of every
// clique, stream mode forwards each clique to a callback that may cancel
// the enumeration by returning false.
class CliqueSink {
public:
    enum class Mode { CountOnly, Collect, Stream };
    using Callback = std::function<bool(std::span<const vertex_t>)>;

    static CliqueSink count_only() { return CliqueSink(Mode::CountOnly, {}); }
    static CliqueSink collect() { return CliqueSink(Mode::Collect, {}); }
    static CliqueSink stream(Callback cb) { return CliqueSink(Mode::Stream, std::move(cb)); }

    // Returns false to request early termination.
    bool report(std::span<const vertex_t> clique) {
        ++count_;
        switch (mode_) {
        case Mode::CountOnly:
            return true;
        case Mode::Collect:
            cliques_.emplace_back(clique.begin(), clique.end());
            return true;
        case Mode::Stream:
            return callback_(clique);
        }
        return true;
    }

    Mode mode() const noexcept { return mode_; }
    std::uint64_t count() const noexcept { return count_; }
    const std::vector<std::vector<vertex_t>>& cliques() const noexcept { return cliques_; }

private:
    CliqueSink(Mode mode, Callback cb) : mode_(mode), callback_(std::move(cb)) {}

    Mode mode_;
    Callback callback_;
    std::uint64_t count_ = 0;
    std::vector<std::vector<vertex_t>> cliques_;
};

} // namespace mce

#endif // MCE_SINK_HPP
