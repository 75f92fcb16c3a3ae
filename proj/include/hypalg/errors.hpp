#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypalg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The series is not well defined: a bottom parameter produces a zero
/// denominator that is not shielded by an earlier truncation of the series.
class IllDefinedError : public Error {
public:
    explicit IllDefinedError(const std::string& msg) : Error(msg) {}
};

/// A set of algebraic parameters would make the coefficient ratio irrational.
class ConjugateClosureViolation : public Error {
public:
    explicit ConjugateClosureViolation(const std::string& msg) : Error(msg) {}
};

/// A parameter atom outside the algebraic closure of Q (e.g. "pi").
class NonAlgebraicParameter : public Error {
public:
    explicit NonAlgebraicParameter(const std::string& msg) : Error(msg) {}
};

/// Expression or document syntax error, with position information.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The series prefix is too short for the requested guessing problem.
class InsufficientTermsError : public Error {
public:
    explicit InsufficientTermsError(const std::string& msg) : Error(msg) {}
};

} // namespace hypalg
