#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uqsl2 {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class BasisMismatch : public Error {
public:
    BasisMismatch() : Error("basis mismatch") {}
    explicit BasisMismatch(const std::string& what) : Error(what) {}
};

// A matrix or algebra element that had to be inverted is not invertible.
class SingularError : public Error {
public:
    using Error::Error;
};

// Catch-all for arguments outside an operation's domain (unknown names,
// undocumented basis pairs, d = 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace uqsl2
