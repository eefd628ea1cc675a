#pragma once

#include <stdexcept>

namespace boole {

/// A rational literal could not be parsed.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was asked for a value outside its domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The exact solver met a singular coefficient matrix.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace boole
