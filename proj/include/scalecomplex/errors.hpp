#ifndef SCALECOMPLEX_ERRORS_HPP
#define SCALECOMPLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scx {

/// Invalid argument: out-of-range pitch, empty scale where one is required,
/// face outside a complex, and similar contract violations.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation only defined for the twelve-tone universe.
class UnsupportedUniverseError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Exhaustive enumeration refused because the universe is too large.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A previously valid handle (e.g. a free pair) no longer applies.
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An internal consistency check failed (e.g. unexpected kernel dimension).
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace scx

#endif
