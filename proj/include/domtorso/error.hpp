#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domtorso {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a presentation, ray or scenario text.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what)
        , line_(line)
        , column_(column)
        , message_(what)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    /// The message without the position.
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

} // namespace domtorso
