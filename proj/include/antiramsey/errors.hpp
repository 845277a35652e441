#pragma once

#include <stdexcept>
#include <string>

namespace antiramsey {

/// Malformed input or a violated precondition. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search exceeded its configured work budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal guarantee was broken (should be unreachable).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace antiramsey
