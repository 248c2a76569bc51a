#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Malformed graph or input data (loops, duplicate pairs, bad syntax).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold. The message
/// names the failed inequality or the offending vertex.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal invariant was broken. Never caused by valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace rainbow
