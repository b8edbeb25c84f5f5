#pragma once

#include <stdexcept>
#include <string>

namespace remspec {

// Raised when a mathematical precondition is violated or a computation
// cannot proceed (e.g. a decomposable pencil, a dependent input pair).
class MathError : public std::runtime_error {
public:
    enum class Kind {
        precondition,     // caller violated a documented precondition
        decomposable,     // the pencil admits a decomposition; analysis refused
        dependent_pair,   // numerator/denominator fail the coprimality contract
        not_first_integral, // supplied derivation does not annihilate the pair
        singular_change,  // no usable coordinate change found
        zero_divisor,     // inversion of an exact zero requested
    };

    MathError(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Raised by the expression parser; carries the byte offset of the failure.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string message)
        : std::runtime_error(std::move(message)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace remspec
