#pragma once

#include <stdexcept>
#include <string>

namespace combi {

/// Raised when a request exceeds an exhaustive-enumeration or truncation bound.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text encoding of an object, triple or polynomial.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid combination of arguments (missing bound sequence, unknown id, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace combi
