#ifndef SRJET_ERROR_HPP
#define SRJET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace srjet {

// Bad grid shape, out-of-grid cell, inverted path endpoints, shape mismatch.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A brute-force routine was asked to run past its hard size guard.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A vertex set does not have the structure of a facet.
class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller broke an operation's precondition (e.g. witness asked for P >= Q).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An internally constructed object failed validation. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace srjet

#endif // SRJET_ERROR_HPP
