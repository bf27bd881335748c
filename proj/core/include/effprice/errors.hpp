#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace effprice {

// All library failures derive from Error so callers can map them to a single
// "data/domain error" exit path.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Out-of-range argument: negative rate, alpha outside [0,1), growth <= -1, ...
class DomainError : public Error {
public:
    using Error::Error;
};

// Input text that is not a well-formed FRED CSV.
class FormatError : public Error {
public:
    using Error::Error;
};

class ParseError : public FormatError {
public:
    ParseError(std::size_t line, const std::string& reason)
        : FormatError("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
    ParseError(const std::string& file, std::size_t line, const std::string& reason)
        : FormatError(file + ":" + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

// Month list attached: missing months in a series, or rate months needed by an
// HPI month after lag alignment.
class MonthListError : public Error {
public:
    MonthListError(const std::string& prefix, std::vector<std::string> months);

    [[nodiscard]] const std::vector<std::string>& months() const noexcept { return months_; }

private:
    std::vector<std::string> months_;
};

class GapError : public MonthListError {
public:
    using MonthListError::MonthListError;
};

class AlignmentError : public MonthListError {
public:
    using MonthListError::MonthListError;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class SizeError : public Error {
public:
    using Error::Error;
};

// Raised only if a mathematically excluded state is reached.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace effprice
