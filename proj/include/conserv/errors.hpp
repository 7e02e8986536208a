#pragma once

#include <stdexcept>
#include <string>

namespace conserv {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Conditioning on an event of zero prior probability.
class NullEventError : public Error {
public:
    using Error::Error;
};

/// Conditioning a belief set on an event that is null under some member.
class AmbiguouslyNullError : public Error {
public:
    using Error::Error;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A value that cannot be mapped back through the utility function.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Two utility functions that are not positive affine transformations of each other.
class IncompatibleTastesError : public Error {
public:
    using Error::Error;
};

/// A constructed object would break one of its invariants. `path` names the
/// offending field (for scenarios, a JSON-pointer-like path).
class ValidationError : public Error {
public:
    ValidationError(std::string path, const std::string& what)
        : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Malformed scenario text.
class ParseError : public Error {
public:
    ParseError(std::string path, const std::string& what)
        : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace conserv
