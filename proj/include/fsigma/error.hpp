#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsigma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed diagram / forest / rational text. Carries the byte offset of the failure.
class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operation was called outside its documented domain (dimension mismatch, band violation, ...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// A bounded search ran out of budget before reaching its goal.
class SearchExhausted : public Error
{
public:
    using Error::Error;
};

} // namespace fsigma
