#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polewarp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the domain of a transformation (e.g. the warp's singular ray).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Mesh connectivity violates an invariant (index range, closedness, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A mesh vertex coincides with the star center.
class DegenerateVertexError : public Error {
public:
    DegenerateVertexError(std::size_t vertex, const std::string& msg)
        : Error(msg), vertex_(vertex) {}
    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

/// A mesh vertex lands on the singular ray of the pole warp.
class SingularityError : public Error {
public:
    SingularityError(std::size_t vertex, const std::string& msg)
        : Error(msg), vertex_(vertex) {}
    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

/// The query point is not swept by any chord of the requested branch.
class NotInChordFamily : public Error {
public:
    using Error::Error;
};

}  // namespace polewarp
