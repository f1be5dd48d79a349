#pragma once

#include <stdexcept>
#include <string>

namespace besforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (headers, counts, ids out of range).
class FormatError : public Error
{
public:
    using Error::Error;
};

/// A caller asked for something outside an operation's preconditions.
class ParameterError : public Error
{
public:
    using Error::Error;
};

/// The input is well formed but the requested object could not be produced.
class DomainError : public Error
{
public:
    using Error::Error;
};

} // namespace besforge
