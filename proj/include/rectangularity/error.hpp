#pragma once

#include <stdexcept>
#include <string>

namespace rectangularity {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a range or structural invariant (entry out of range, not a bijection, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Lengths or orders of the operands do not agree.
class SizeError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an input outside its domain (e.g. a graph pair without P2).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The request exceeds a configured search bound.
class CapacityError : public Error {
public:
    using Error::Error;
};

} // namespace rectangularity
