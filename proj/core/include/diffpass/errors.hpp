#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace diffpass {

/// Shape or well-formedness violation: mismatched ambient (n, m), out-of-range
/// indices, duplicate leads, malformed input.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A bounded computation ran out of its step budget.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::string last_state)
        : std::runtime_error(what), last_state_(std::move(last_state)) {}

    const std::string& last_state() const noexcept { return last_state_; }

private:
    std::string last_state_;
};

} // namespace diffpass
