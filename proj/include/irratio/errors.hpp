#pragma once

#include <stdexcept>
#include <string>

namespace irratio {

// Caller supplied something outside an operation's precondition.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : InvalidInput {
    DivisionByZero() : InvalidInput("division by zero") {}
    using InvalidInput::InvalidInput;
};

// Argument lies outside the range an enclosure routine supports.
struct UnsupportedDomain : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A certified result could not be reached below the configured precision
// or size cap.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceCap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A self-check failed. Seeing one of these means a bug, not bad input.
struct InternalFault : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace irratio
