#pragma once

#include <stdexcept>
#include <string>

namespace sumlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A precondition on an operand or parameter does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed interchange data.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A search would exceed its configured candidate budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace sumlab
