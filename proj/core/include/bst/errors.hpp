#pragma once

#include <stdexcept>
#include <string>

namespace bst {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid caller-supplied data: out-of-range ids, self-loops, bad parameters.
class InputError : public Error {
public:
    using Error::Error;
};

// Text input that cannot be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// The instance admits no solution (e.g. a terminal unreachable from the rest).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// A size or resource cap was exceeded and the operation refused to run.
class LimitError : public Error {
public:
    using Error::Error;
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

} // namespace bst
