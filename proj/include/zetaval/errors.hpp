#ifndef ZETAVAL_ERRORS_HPP
#define ZETAVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetaval {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by zero, inverse of zero, malformed number text.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the documented domain of an operation
/// (offset a outside (0,1], non-prime modulus, odd n where even is required).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operands live in different scalar rings (e.g. cyclotomic orders differ).
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// A character table failed validation. constraint() names the violated rule.
class CharacterError : public Error {
public:
    CharacterError(std::string constraint, const std::string& detail)
        : Error("invalid character (" + constraint + "): " + detail), constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// The hypothesis of a theorem-backed operation does not hold for the inputs
/// (trivial character, imprimitive character, parity mismatch).
class HypothesisError : public Error {
public:
    using Error::Error;
};

} // namespace zetaval

#endif
