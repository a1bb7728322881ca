#pragma once

#include <stdexcept>
#include <string>

namespace tasirs {

// Bad input: violated precondition, unknown key, unparsable value.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed curve file. Carries the 1-based line number when known (0 otherwise).
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t line)
        : ValidationError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A BER curve never crosses the requested target.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

}  // namespace tasirs
