#pragma once

#include <stdexcept>
#include <string>

namespace kspoly {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (word tokens, dataset JSON, proof files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A value lies outside the domain an operation accepts (ray ids, shifts, letters).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input data violates a structural invariant (duplicate bases, non-uniform
/// ray occurrence, non-integral MacWilliams output, ...).
class InconsistentData : public Error {
public:
    using Error::Error;
};

/// An exhaustive search was asked to go beyond its configured limit.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Golden-ring arithmetic left the range of 64-bit integers.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace kspoly
