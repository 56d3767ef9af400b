#pragma once

#include <stdexcept>
#include <string>

namespace charcone {

/// Invalid arguments or violated preconditions (bad parameters, dimension
/// mismatch, p+ = 0, wrong half-space, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed GFN1/CSV/JSON input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File system failures.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical failure detected at run time (non-finite integrand, diverging
/// quadrature, interpolation outside the sampled range).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace charcone
