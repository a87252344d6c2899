#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace indkernel {

// Base of every error the library reports for bad input. Anything else
// escaping the library is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownElement : public Error {
public:
    using Error::Error;
};

class DuplicateName : public Error {
public:
    using Error::Error;
};

class CodomainMismatch : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

// W(f) has no elements because no label is nullary.
class EmptyWType : public Error {
public:
    using Error::Error;
};

class NotCommuting : public Error {
public:
    using Error::Error;
};

class NotASurjection : public Error {
public:
    using Error::Error;
};

class EmptyFamily : public Error {
public:
    using Error::Error;
};

class NoFactorization : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Positioned failure from the rule-file reader. Lines and columns are 1-based.
class ParseError : public Error {
public:
    enum class Kind { Syntax, UndeclaredName, DuplicateName };

    ParseError(Kind kind, std::size_t line, std::size_t column, std::string message,
               std::vector<std::string> expected = {});

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
};

} // namespace indkernel
