#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dk {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed expression text; `position` is a byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Operation mixing values from different variable universes.
struct VarsetError : Error {
    using Error::Error;
};

// Mathematically invalid request: inconsistent specialization, missing
// assignment, non-monic curve where a monic one is required, and so on.
struct DomainError : Error {
    using Error::Error;
};

}  // namespace dk
