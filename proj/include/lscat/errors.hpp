#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lscat {

// Base of every error the engine raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0 && column == 0) return message;
        if (line == 0) return "column " + std::to_string(column) + ": " + message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

// Structurally invalid algebra, element or differential.
class ModelError : public Error {
public:
    using Error::Error;
};

// A mathematical precondition does not hold (non-elliptic input, wrong k, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A result failed its own verification. Never expected on valid input.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace lscat
