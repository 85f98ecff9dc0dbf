#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbent {

/// Input text could not be parsed.  `position` is a byte offset into the
/// offending source string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A stated precondition of the requested operation does not hold for the
/// given input (for example, asking for the dual of a non-bent function).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two computation routes that must agree produced different results.
/// Reaching this indicates a defect in the library, never bad input.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pbent
