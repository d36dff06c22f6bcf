#ifndef EQUIPROJ_ERRORS_HPP
#define EQUIPROJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equiproj {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search or enumeration exceeded its configured budget.
struct ResourceLimit : Error {
    using Error::Error;
};

/// A caller-side precondition does not hold (wrong dimension, not an edge
/// direction, invalid parameter).
struct PreconditionError : Error {
    using Error::Error;
};

/// Projection direction orthogonal to the plane of a facet.
struct InadmissibleDirection : Error {
    InadmissibleDirection(const std::string& what, std::size_t facet_index)
        : Error(what), facet(facet_index) {}
    std::size_t facet;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace equiproj

#endif  // EQUIPROJ_ERRORS_HPP
