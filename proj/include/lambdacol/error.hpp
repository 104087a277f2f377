#pragma once

#include <stdexcept>
#include <string>

namespace lambdacol {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied an argument outside an operation's domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A configurable size cap (vertices, shapes, enumeration) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A bound or formula does not apply to the given input (e.g. the degree
/// bound on an edgeless graph).
class NotApplicable : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind {
    MissingHeader,
    Malformed,
    SelfLoop,
    EndpointOutOfRange,
    DuplicateEdge,
    EdgeCountMismatch,
    DuplicateVertex,
    MissingVertex,
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    /// 1-based line number, 0 when the error is not tied to a line.
    int line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

} // namespace lambdacol
