#ifndef MCE_BIT_MATRIX_HPP
#define MCE_BIT_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "mce/graph.hpp"

namespace mce {

// Packed symmetric adjacency matrix with zero diagonal.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::uint32_t n);

    std::uint32_t dimension() const noexcept { return n_; }

    bool test(vertex_t u, vertex_t v) const {
        return (words_[std::uint64_t(u) * stride_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void set_symmetric(vertex_t u, vertex_t v);

private:
    std::uint32_t n_ = 0;
    std::uint32_t stride_ = 0; // 64-bit words per row
    std::vector<std::uint64_t> words_;
};

inline constexpr std::uint32_t kDefaultMatrixCap = 50'000;

// Throws CapExceeded when g has more than cap vertices; the matrix for such
// graphs would not fit in memory and a list-based variant should be used.
BitMatrix to_bit_matrix(const Graph& g, std::uint32_t cap = kDefaultMatrixCap);

} // namespace mce

#endif // MCE_BIT_MATRIX_HPP
