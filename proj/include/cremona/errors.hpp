#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed values: variable-list mismatch, bad JSON shape, invalid chart id.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Mathematically invalid request: division by zero, ord of the zero
/// polynomial, ramification index of a contracted curve.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Degenerate geometry: collinear triple, identically-zero composite map,
/// resultant of two polynomials constant in the eliminated variable.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// A computation left the rational numbers (irrational intersection or
/// root). Raised instead of silently dropping data.
class UnsupportedFieldError : public Error {
public:
    using Error::Error;
};

/// A seeded search or enumeration ran out of its configured budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace cremona
