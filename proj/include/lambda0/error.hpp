#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambda0 {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression text that does not conform to the grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Arguments outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace lambda0
