#ifndef MCE_ERRORS_HPP
#define MCE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mce {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph too large for the adjacency-matrix representation; callers should
// fall back to a list-based algorithm.
struct CapExceeded : Error {
    using Error::Error;
};

struct MalformedLine : Error {
    std::size_t line_number;
    MalformedLine(std::size_t line, const std::string& detail)
        : Error("line " + std::to_string(line) + ": " + detail), line_number(line) {}
};

struct MissingHeader : Error {
    using Error::Error;
};

// An enumerator reported the same clique twice.
struct DuplicateClique : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct UnknownFamily : Error {
    using Error::Error;
};

} // namespace mce

#endif // MCE_ERRORS_HPP
