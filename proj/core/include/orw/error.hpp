#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orw {

// Malformed ordinal expression; `position` is a 0-based byte offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Checked natural-number arithmetic left the representable range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// An operation's precondition does not hold for its arguments.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A search exceeded its configured work budget.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orw
