#pragma once

#include <stdexcept>
#include <string>

namespace spx {

enum class ErrorKind {
    invalid_spec,
    parse,
    unsupported_size,
    non_convergence,
    io,
};

/// Library-wide exception. The kind drives the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed textual input. `position` is a byte offset (graph6) or a line
/// number (corpus files), as named by the message.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::parse, what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An iterative method hit its sweep cap; carries the last estimate.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double estimate)
        : Error(ErrorKind::non_convergence, what), estimate_(estimate) {}

    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

}  // namespace spx
