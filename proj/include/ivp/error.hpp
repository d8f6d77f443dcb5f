#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ivp {

/// Raised for violated preconditions and invalid user input (bad prime,
/// exhausted finite set, non-member polynomial, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a set or polynomial string. `position` is a 0-based
/// character offset into the text that was being parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace ivp
