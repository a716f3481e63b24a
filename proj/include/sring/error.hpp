#pragma once

#include <stdexcept>
#include <string>

namespace sring {

/// Input that violates an operation's precondition (bad labels, non-faces,
/// malformed files). The CLI maps this to exit status 2.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size bound (vertex count, generator count) was exceeded.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by checked machine-integer arithmetic; callers retry with
/// arbitrary-precision scalars.
class ArithmeticOverflow : public std::overflow_error {
public:
    ArithmeticOverflow() : std::overflow_error("int64 overflow") {}
};

}  // namespace sring
