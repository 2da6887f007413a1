#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padictree {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition or an operation outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidPrime : public Error {
public:
    using Error::Error;
};

/// Malformed expression or number text; `position` is a 0-based offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// The requested engine cannot handle the given polynomial.
class EngineMismatch : public Error {
public:
    using Error::Error;
};

/// A work budget (e.g. lifted node count) was exhausted.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

}  // namespace padictree
