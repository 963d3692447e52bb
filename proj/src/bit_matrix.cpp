#include "mce/bit_matrix.hpp"

#include <string>

#include "mce/errors.hpp"

namespace mce {

BitMatrix::BitMatrix(std::uint32_t n)
    : n_(n), stride_((n + 63) / 64), words_(std::uint64_t(n) * stride_, 0) {}

void BitMatrix::set_symmetric(vertex_t u, vertex_t v) {
    words_[std::uint64_t(u) * stride_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    words_[std::uint64_t(v) * stride_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

BitMatrix to_bit_matrix(const Graph& g, std::uint32_t cap) {
    if (g.vertex_count() > cap)
        throw CapExceeded("adjacency matrix cap exceeded (n=" +
                          std::to_string(g.vertex_count()) +
                          ", cap=" + std::to_string(cap) + ")");
    BitMatrix m(g.vertex_count());
    for (vertex_t u = 0; u < g.vertex_count(); ++u)
        for (vertex_t w : g.neighbors(u))
            if (w > u) m.set_symmetric(u, w);
    return m;
}

} // namespace mce
