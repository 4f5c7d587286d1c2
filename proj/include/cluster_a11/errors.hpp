#ifndef CLUSTER_A11_ERRORS_HPP
#define CLUSTER_A11_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cluster_a11 {

/// Base of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The dividend is not a multiple of the divisor in the Laurent ring.
class ExactDivisionError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Laurent polynomials have poles on the coordinate axes.
class EvalAtZeroError : public Error {
public:
    using Error::Error;
};

/// Exponent arithmetic left the signed 64-bit range.
class ExponentOverflowError : public Error {
public:
    using Error::Error;
};

/// Degree-type query on the zero polynomial.
class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

/// Index outside the mathematical domain of an element family (e.g. s_n with n < -1).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input too large to be computed safely.
class ScaleError : public Error {
public:
    using Error::Error;
};

/// An invariant that the mathematics guarantees was observed to fail.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input. `position()` is a byte offset into the text for
/// syntax errors; schema violations carry a JSON pointer in `path()` instead.
class ParseError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ParseError(const std::string& what, std::size_t position, std::string path = {})
        : Error(what), position_(position), path_(std::move(path)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::size_t position_;
    std::string path_;
};

}  // namespace cluster_a11

#endif  // CLUSTER_A11_ERRORS_HPP
