#pragma once

#include <stdexcept>
#include <string>

namespace rescalc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different ambient dimensions or module ranks.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message)
        , line_(line)
        , column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace rescalc
