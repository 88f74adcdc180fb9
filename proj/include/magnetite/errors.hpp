#pragma once

#include <stdexcept>
#include <string>

namespace magnetite {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different ambient groups (or have inconsistent lengths).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An operation that requires a sharp monoid was given one with units.
class NotSharpError : public Error {
public:
    using Error::Error;
};

/// A configured cap (ball size, coefficient bound, enumeration size) was hit.
/// Never a wrong answer: the computation refuses instead of truncating.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// Mathematically invalid input: element outside a monoid, magnet outside the
/// ambient group, action target not contained in the acting monoid, ...
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed document text or schema violation.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace magnetite
