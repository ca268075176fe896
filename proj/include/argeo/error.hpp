#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argeo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed program text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A program that parses but violates a load-time invariant.
class ProgramError : public Error {
public:
    using Error::Error;
};

// Failures while reasoning: budgets, size bounds, missing priorities.
class EngineError : public Error {
public:
    using Error::Error;
};

}  // namespace argeo
