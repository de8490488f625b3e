#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nofactor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed presentation text or word text.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// A horizontal letter where a vertical one is required, or vice versa.
class ClassError : public Error {
public:
    using Error::Error;
};

class DuplicateLabel : public Error {
public:
    using Error::Error;
};

/// An operation that needs a complete square complex was given one that is not.
class NotCSC : public Error {
public:
    using Error::Error;
};

class UnsupportedComplex : public Error {
public:
    using Error::Error;
};

/// A search hit its configured bound before reaching a conclusion.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class UnknownWall : public Error {
public:
    using Error::Error;
};

/// The commuting-powers screen found a torus relation, so the pair is not an anti-torus.
class HypothesisRejected : public Error {
public:
    using Error::Error;
};

}  // namespace nofactor
