#pragma once

#include <stdexcept>

namespace cmplane {

/// Input violates a mathematical precondition of an operation
/// (non-coprime pair, a+b+c != d, non-integral twist degree, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal exactness check failed, e.g. a division that must be exact
/// left a remainder.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cmplane
